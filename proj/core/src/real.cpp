#include "penner/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace penner {

namespace {
mpfr_prec_t pmax(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}
Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(const mpz_class& v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
Real::Real(const mpq_class& v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::with_prec(mpfr_prec_t bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

#define PENNER_COMPOUND(op, fn)                  \
  Real& Real::operator op(const Real& o) {       \
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN); \
    fn(v_, v_, o.v_, MPFR_RNDN);                 \
    return *this;                                \
  }
PENNER_COMPOUND(+=, mpfr_add)
PENNER_COMPOUND(-=, mpfr_sub)
PENNER_COMPOUND(*=, mpfr_mul)
PENNER_COMPOUND(/=, mpfr_div)
#undef PENNER_COMPOUND

#define PENNER_BINARY(op, fn)                     \
  Real operator op(const Real& a, const Real& b) { \
    Real r(pmax(a, b));                            \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);               \
    return r;                                      \
  }
PENNER_BINARY(+, mpfr_add)
PENNER_BINARY(-, mpfr_sub)
PENNER_BINARY(*, mpfr_mul)
PENNER_BINARY(/, mpfr_div)
#undef PENNER_BINARY

Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(v_);
}

double Real::log_abs() const {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  long e;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

mpz_class Real::round_to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

mpq_class Real::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Real::to_fixed(int decimals) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", decimals, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real log(const Real& x) {
  Real r(x.prec());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
Real cos(const Real& x) {
  Real r(x.prec());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real sin(const Real& x) {
  Real r(x.prec());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.norm();
  Real r = (a.re * b.re + a.im * b.im) / d;
  Real i = (a.im * b.re - a.re * b.im) / d;
  return {std::move(r), std::move(i)};
}
Real Complex::norm() const { return re * re + im * im; }
Real Complex::abs() const {
  Real r(prec());
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

}  // namespace penner
