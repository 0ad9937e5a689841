#pragma once

#include <optional>
#include <vector>

#include "penner/matrix.hpp"
#include "penner/penner.hpp"
#include "penner/poly.hpp"
#include "penner/real.hpp"

namespace penner {

// A ray through a nonzero intersection matrix. Everything computed from it
// is scale-invariant; the representative is never normalised.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(IntersectionMatrix rep);
  const IntersectionMatrix& representative() const { return rep_; }
  std::size_t n() const { return rep_.n(); }

 private:
  IntersectionMatrix rep_;
};

// Q_{i<-j} = I - omega_ij^{-1} T_ji Omega: identity except row j.
ExactMatrix q_arrow(const BoundaryPoint& omega_star, int i, int j);
// P_gamma = Q_{i1<-iK} ... Q_{i3<-i2} Q_{i2<-i1}.
ExactMatrix p_gamma(const BoundaryPoint& omega_star, const std::vector<int>& gamma);

struct LimitMap {
  int pivot = 0;                                  // 1-based coordinate m with (e_{i1}^T Omega)_m != 0
  std::vector<std::vector<Rational>> w_basis;     // e_t - (r_t / r_m) e_m, t != m
  RatMatrix matrix;                               // f_gamma in that basis
  RatPoly charpoly;
};

LimitMap f_gamma(const BoundaryPoint& omega_star, const std::vector<int>& gamma);

// Inserts the backtracking (i_k v i_k) after position k (1..K) and compares
// the two restricted maps exactly.
bool homotopy_invariance_check(const BoundaryPoint& omega_star, const std::vector<int>& gamma, int position,
                               int vertex);
std::vector<int> insert_backtracking(const std::vector<int>& gamma, int position, int vertex);

struct EigenvectorEstimate {
  Real lhs, rhs;
  Real lambda;
  Real scale;                 // multiplier applied to the unit-sum eigenvector
  std::vector<Real> eigenvector;
};

// Left PF eigenvector of M(k Omega) against p_1 e_{i1}^T Omega + omega_{i2 i1}^{-1} e_{i2}^T Omega
// (all at k Omega). The eigenvector's free scale is chosen to minimise the
// sup-norm distance.
EigenvectorEstimate eigenvector_asymptotics(const IntersectionMatrix& omega, const TwistWord& word,
                                            const Rational& k, int digits = 50);
// The right-hand side alone.
Real eigenvector_bound(const IntersectionMatrix& omega_k, const TwistWord& word, mpfr_prec_t bits);

struct RayRow {
  Rational k;
  RatPoly charpoly;
  Real lambda;
  std::vector<Real> quotient;  // charpoly / (x - lambda)
  double distance = 0;         // against the limit charpoly; NaN in the divergent regime
  std::vector<Real> magnitudes;  // eigenvalue moduli, descending
};

struct RayReport {
  bool supported = false;
  std::optional<RatPoly> limit;  // chi(f_gamma) when supported
  std::vector<RayRow> rows;
  bool decreasing = false;     // distances strictly decreasing over the whole sample
  std::size_t tail_start = 0;  // first row from which distances strictly decrease
  // Divergent regime: least-squares slope of log|eig_j| against log k, and
  // the geometric mean of |eig_j| / k^round(exponent_j) over the scales.
  std::vector<double> exponents, constants;
};

RayReport ray_convergence_experiment(const IntersectionMatrix& omega, const TwistWord& word,
                                     const std::vector<Rational>& scales, int digits = 50);

// Growth exponents and constants of the sorted eigenvalue moduli, as in RayReport.
void fit_growth(const std::vector<RayRow>& rows, std::vector<double>& exponents, std::vector<double>& constants);

}  // namespace penner
