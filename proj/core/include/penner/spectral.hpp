#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "penner/graph.hpp"
#include "penner/matrix.hpp"
#include "penner/penner.hpp"
#include "penner/poly.hpp"
#include "penner/real.hpp"

namespace penner {

// det(xI - M). Integer input uses Hessenberg reduction modulo word-sized
// primes with Chinese remaindering up to a Hadamard-type coefficient bound.
IntPoly char_poly_exact(const IntMatrix& m);
// Rational input: clears the common denominator d, then rescales c_j by d^(n-j).
RatPoly char_poly_exact(const RatMatrix& m);
// Faddeev-LeVerrier over Q. Slow on large entries; kept as an independent check.
RatPoly char_poly_faddeev(const RatMatrix& m);

std::size_t rank_exact(const IntersectionMatrix& omega);

// Exact criterion: G(Omega) connected, Omega nonzero, and the word uses every generator.
bool pf_certify(const ExactMatrix& m, const IntersectionMatrix& omega, const TwistWord& word);
// Nonnegative with a strictly positive power (boolean powering).
bool is_primitive_nonnegative(const ExactMatrix& m);

struct PfValue {
  Real value;
  mpq_class lo, hi;  // exact bracket: the polynomial changes sign on [lo, hi]
  int digits = 0;
};

// Largest eigenvalue of a primitive nonnegative matrix to `digits` decimal digits.
PfValue pf_eigenvalue(const ExactMatrix& m, int digits = 50);
// Same, starting from a known characteristic polynomial.
PfValue pf_root(const IntPoly& charpoly, int digits, const mpq_class& lower, const mpq_class& upper);

// chi = (x-1)^(n-r) * reduced, reduced(1) != 0.
std::pair<int, IntPoly> structure_split(const IntPoly& charpoly, std::size_t n, std::size_t r);

// Eigenvalues different from 1, with multiplicity.
int complexity(const IntPoly& p);
int complexity(const RatPoly& p);
int complexity(const std::vector<Real>& coeffs, double tol);

// p(x) == x^d p(1/x), i.e. palindromic coefficients. With allow_sign, also
// accepts p(x) == -x^d p(1/x).
bool is_reciprocal(const IntPoly& p, bool allow_sign = false);
bool is_reciprocal(const RatPoly& p, bool allow_sign = false);

struct SymplecticForm {
  std::vector<int> order;  // 1-based indices, a-block first
  std::size_t a_size = 0;
  RatMatrix delta;         // [[0, X], [-X^T, 0]] in the permuted basis
};
SymplecticForm symplectic_form(const IntersectionMatrix& omega);
// M^T Delta M == Delta after moving the a-block first.
bool symplectic_check(const IntersectionMatrix& omega, const ExactMatrix& m);
// Requires the bipartition to be contiguous with the block containing index 1 first.
bool symplectic_check_block(const IntersectionMatrix& omega, const ExactMatrix& m);

// h(v) = v^T Omega v / 2.
Rational height(const IntersectionMatrix& omega, const std::vector<Rational>& v);

struct SpectralReport {
  std::size_t n = 0;
  IntPoly charpoly;
  std::size_t rank = 0;
  int unit_part_exponent = 0;
  IntPoly reduced_poly;
  std::optional<PfValue> pf;
  int complexity = 0;
  bool is_pf = false;
  std::string pf_failure;  // why is_pf is false
};

// Full pipeline for an integral Omega. The PF value is only filled when the
// exact criterion holds.
SpectralReport spectral_report(const IntersectionMatrix& omega, const TwistWord& word, int digits = 50);
SpectralReport spectral_report(const IntersectionMatrix& omega, const TwistWord& word, const IntMatrix& m,
                               int digits = 50);

}  // namespace penner
