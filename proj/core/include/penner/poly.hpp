#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "penner/real.hpp"

namespace penner {

// Univariate polynomial, coefficients stored from the constant term up.
// The zero polynomial has no coefficients and degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
  static Poly x_minus(const T& a) { return Poly(std::vector<T>{-a, T(1)}); }
  static Poly monomial(int d, const T& a = T(1)) {
    std::vector<T> c(d + 1);
    c[d] = a;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& operator[](int i) const { return c_[i]; }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<T>& coeffs() const { return c_; }

  T eval(const T& x) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

IntPoly pow(const IntPoly& p, int e);
RatPoly to_rational(const IntPoly& p);
// Throws NotIntegral when a coefficient has a denominator.
IntPoly to_integer(const RatPoly& p);
// Primitive integer multiple with positive leading coefficient.
IntPoly primitive_part(const RatPoly& p);

// Division with remainder over Q.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Exact division by a monic divisor over Z; returns false when the remainder is nonzero.
bool divide_exact(const IntPoly& a, const IntPoly& monic_divisor, IntPoly& quotient);
RatPoly gcd(RatPoly a, RatPoly b);  // monic, or zero
RatPoly monic(const RatPoly& p);

// Multiplicity of x = 1 as a root, by repeated exact division by (x - 1).
int multiplicity_of_one(const IntPoly& p);
int multiplicity_of_one(const RatPoly& p);

// Sign of p at a rational point, exactly.
int sign_at(const IntPoly& p, const mpq_class& x);

// Numerical evaluation of p and p' at a complex point.
void eval_with_derivative(const std::vector<Complex>& coeffs, const Complex& z, Complex& p, Complex& dp);
std::vector<Real> to_real(const IntPoly& p, mpfr_prec_t bits);
std::vector<Real> to_real(const RatPoly& p, mpfr_prec_t bits);

// Human-readable form, highest degree first: "x^3 - 7*x^2 + 5*x - 1".
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);
// Decimal strings, constant term first.
std::vector<std::string> coefficient_strings(const IntPoly& p);
std::vector<std::string> coefficient_strings(const RatPoly& p);

// Squarefree part of a polynomial over Z (primitive, positive leading term).
// A modular squarefree test short-circuits the gcd over Q.
IntPoly squarefree_part(const IntPoly& p);
bool is_squarefree(const IntPoly& p);
// Yun's decomposition: p = lc * prod f_i^i with f_i squarefree and coprime.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Largest bit length among the coefficients.
std::size_t max_coeff_bits(const IntPoly& p);

}  // namespace penner
