#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace penner {

enum class ErrorKind {
  // input validation
  NotSquare,
  NotSymmetric,
  NegativeEntry,
  NonzeroDiagonal,
  IndexOutOfRange,
  InvalidWord,
  DimensionMismatch,
  NonpositiveScale,
  UnknownId,
  ParseError,
  // mathematical preconditions
  NotPerronFrobenius,
  DivisionFailed,
  NotBipartite,
  BlocksNotContiguous,
  NotAnEdge,
  NotSupported,
  NotGeneral,
  NotContractible,
  NotGeneralPath,
  DegenerateRow,
  CurvesIntersect,
  PreconditionViolated,
  RootMismatch,
  AmbiguousRootAssignment,
  NoPseudoAnosov,
  OutOfFormulaRange,
  NotIntegral,
  // budgets
  KBudgetExhausted,
  PrecisionExhausted,
};

std::string_view kind_name(ErrorKind k);

enum class ErrorClass { Validation, Precondition, Budget };
ErrorClass error_class(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace penner
