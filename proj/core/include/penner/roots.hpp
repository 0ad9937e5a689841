#pragma once

#include <vector>

#include "penner/poly.hpp"
#include "penner/real.hpp"

namespace penner {

struct RootSet {
  std::vector<Complex> roots;
  // Inclusion radius per root: the disc of this radius around roots[i]
  // contains a true root (n |p/p'| plus an evaluation-rounding term).
  std::vector<Real> radius;
  // Index of the complex-conjugate partner; a root paired with itself is real
  // and has its imaginary part set to exactly zero.
  std::vector<std::size_t> conj;
  mpfr_prec_t bits = 0;
  bool resolved = false;  // every radius met the requested accuracy

  std::size_t size() const { return roots.size(); }
  bool is_real(std::size_t i) const { return conj[i] == i; }
};

// One Aberth-Ehrlich run at fixed precision. `coeffs` is constant-term first
// with nonzero leading and constant terms. `init` seeds the iteration when
// given (its size must match the degree).
std::vector<Complex> aberth(const std::vector<Real>& coeffs, mpfr_prec_t bits,
                            const std::vector<Complex>* init = nullptr);

// All complex roots, escalating precision until each inclusion radius is at
// most 10^-digits * max(1, |root|) or `max_bits` is reached.
RootSet find_roots(const IntPoly& p, int digits, mpfr_prec_t max_bits = 0);
RootSet find_roots(const RatPoly& p, int digits, mpfr_prec_t max_bits = 0);
RootSet find_roots(const std::vector<Real>& coeffs, int digits, mpfr_prec_t max_bits = 0);

}  // namespace penner
