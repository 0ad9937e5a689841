#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace penner {

// Owning MPFR value with an explicit precision. Binary operations produce a
// result at the larger of the operand precisions; nothing global is touched.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(double v, mpfr_prec_t bits);
  Real(long v, mpfr_prec_t bits);
  Real(const mpz_class& v, mpfr_prec_t bits);
  Real(const mpq_class& v, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  // Same value rounded to a new precision.
  Real with_prec(mpfr_prec_t bits) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Binary exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
  long exponent() const;
  // Natural log of |x| as a double, safe for magnitudes far outside double range.
  double log_abs() const;
  mpz_class round_to_integer() const;
  mpq_class to_rational() const;
  // Decimal string with `digits` significant digits.
  std::string to_string(int digits) const;
  // Fixed-point decimal string with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pi(mpfr_prec_t bits);
Real cos(const Real& x);
Real sin(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return re.prec(); }
  Complex with_prec(mpfr_prec_t bits) const { return {re.with_prec(bits), im.with_prec(bits)}; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

  Complex conj() const { return {re, -im}; }
  Real norm() const;  // |z|^2
  Real abs() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace penner
