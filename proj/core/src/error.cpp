#include "penner/error.hpp"

namespace penner {

std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonpositiveScale: return "NonpositiveScale";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotPerronFrobenius: return "NotPerronFrobenius";
    case ErrorKind::DivisionFailed: return "DivisionFailed";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::BlocksNotContiguous: return "BlocksNotContiguous";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::NotGeneral: return "NotGeneral";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::NotGeneralPath: return "NotGeneralPath";
    case ErrorKind::DegenerateRow: return "DegenerateRow";
    case ErrorKind::CurvesIntersect: return "CurvesIntersect";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::RootMismatch: return "RootMismatch";
    case ErrorKind::AmbiguousRootAssignment: return "AmbiguousRootAssignment";
    case ErrorKind::NoPseudoAnosov: return "NoPseudoAnosov";
    case ErrorKind::OutOfFormulaRange: return "OutOfFormulaRange";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::KBudgetExhausted: return "KBudgetExhausted";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "Unknown";
}

ErrorClass error_class(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSquare:
    case ErrorKind::NotSymmetric:
    case ErrorKind::NegativeEntry:
    case ErrorKind::NonzeroDiagonal:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InvalidWord:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NonpositiveScale:
    case ErrorKind::UnknownId:
    case ErrorKind::ParseError:
      return ErrorClass::Validation;
    case ErrorKind::KBudgetExhausted:
    case ErrorKind::PrecisionExhausted:
      return ErrorClass::Budget;
    default:
      return ErrorClass::Precondition;
  }
}

}  // namespace penner
