#pragma once

#include <utility>
#include <vector>

#include "penner/poly.hpp"
#include "penner/real.hpp"
#include "penner/spectral.hpp"

namespace penner {

struct Factorization {
  std::vector<std::pair<IntPoly, int>> factors;  // irreducible, monic, with multiplicity
  bool certified = false;  // every factor's irreducibility was established rigorously

  IntPoly product() const;
};

// Complete factorisation of a monic integer polynomial over Z. Factor
// degrees are first restricted by distinct-degree factorisation modulo
// several primes; remaining cases are settled by conjugate-closed root
// subset search with exact-division verification.
Factorization factor_monic(const IntPoly& p);

// Degrees d, 0 < d < deg f, that are compatible with the factor-degree
// patterns of a squarefree f modulo every prime tried.
std::vector<int> admissible_factor_degrees(const IntPoly& f, std::size_t primes = 40);

struct PfFactor {
  IntPoly factor;
  int degree = 0;
  PfValue lambda;  // bracket certified against `factor`
};

// Irreducible factor of `reduced` having the PF root as a root. Escalates the
// precision 4x up to five times when the assignment is ambiguous.
PfFactor pf_factor(const IntPoly& reduced, const PfValue& lambda, const mpq_class& lower, const mpq_class& upper);
int degree_of_pf_root(const SpectralReport& report);

struct ConvergenceInput {
  IntPoly u;
  Real lambda;
};

struct ConvergenceRow {
  Real lambda;
  std::vector<Real> quotient;  // u / (x - lambda), constant term first
  double distance = 0;         // max coefficient difference to the limit
  // For each tracked limit root: does the root of u nearest to it lie in
  // the same irreducible factor as lambda?
  std::vector<bool> same_factor;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::vector<Complex> tracked_roots;  // roots of the limit other than 0 and 1
  bool lambda_diverging = false;       // strictly increasing over the sample
  bool distances_decreasing = false;   // strictly decreasing over the sample
};

// Numeric deflation of each u_k by its PF root and comparison with the
// limit polynomial v (coefficients constant term first).
ConvergenceReport convergence_diagnostic(const std::vector<ConvergenceInput>& seq, const std::vector<Real>& v,
                                         int digits = 50);

// Synthetic division by (x - r); returns the quotient and writes the remainder.
std::vector<Real> deflate(const std::vector<Real>& coeffs, const Real& r, Real* remainder = nullptr);

}  // namespace penner
