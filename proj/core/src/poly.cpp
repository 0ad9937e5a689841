#include "penner/poly.hpp"

#include <sstream>

#include "penner/error.hpp"
#include "penner/modular.hpp"

namespace penner {

IntPoly pow(const IntPoly& p, int e) {
  IntPoly r = IntPoly::constant(1), b = p;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<mpq_class> c(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    if (q.get_den() != 1) throw Error(ErrorKind::NotIntegral, "coefficient " + q.get_str());
    c.push_back(q.get_num());
  }
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  mpz_class l = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> c;
  mpz_class g = 0;
  for (const auto& q : p.coeffs()) {
    c.push_back(q.get_num() * (l / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.back().get_mpz_t());
  }
  if (c.back() < 0) g = -g;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionFailed, "division by the zero polynomial");
  const int db = b.degree();
  std::vector<mpq_class> r = a.coeffs();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<mpq_class> q(a.degree() - db + 1);
  const mpq_class& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpq_class f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

bool divide_exact(const IntPoly& a, const IntPoly& d, IntPoly& quotient) {
  if (!d.is_monic()) throw Error(ErrorKind::DivisionFailed, "divisor is not monic");
  const int dd = d.degree();
  if (a.is_zero()) {
    quotient = IntPoly();
    return true;
  }
  if (a.degree() < dd) return false;
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(a.degree() - dd + 1);
  for (int i = a.degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    mpz_class f = r[i];
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d[j];
  }
  for (int i = 0; i < dd; ++i)
    if (r[i] != 0) return false;
  quotient = IntPoly(std::move(q));
  return true;
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return mpq_class(1 / p.leading()) * p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

int multiplicity_of_one(const IntPoly& p) {
  if (p.is_zero()) return 0;
  IntPoly cur = p;
  int m = 0;
  // Synthetic division by (x - 1) is exact over Z regardless of the leading coefficient.
  while (cur.degree() >= 1) {
    mpz_class s = 0;
    for (const auto& c : cur.coeffs()) s += c;
    if (s != 0) break;
    std::vector<mpz_class> qc(cur.degree());
    mpz_class acc = 0;
    for (int i = cur.degree(); i >= 1; --i) {
      acc += cur[i];
      qc[i - 1] = acc;
    }
    cur = IntPoly(std::move(qc));
    ++m;
  }
  return m;
}

int multiplicity_of_one(const RatPoly& p) {
  if (p.is_zero()) return 0;
  return multiplicity_of_one(primitive_part(p));
}

int sign_at(const IntPoly& p, const mpq_class& x) {
  // Homogenized Horner: sum c_i a^i b^(d-i) has the sign of p(a/b) since b > 0.
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = 0, bp = 1;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a + p[i] * bp;
    bp *= b;
  }
  return sgn(acc);
}

void eval_with_derivative(const std::vector<Complex>& c, const Complex& z, Complex& p, Complex& dp) {
  const mpfr_prec_t bits = z.prec();
  p = Complex(bits);
  dp = Complex(bits);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

std::vector<Real> to_real(const IntPoly& p, mpfr_prec_t bits) {
  std::vector<Real> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c, bits);
  return out;
}

std::vector<Real> to_real(const RatPoly& p, mpfr_prec_t bits) {
  std::vector<Real> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c, bits);
  return out;
}

namespace {

template <class T>
std::string render(const Poly<T>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p[i];
    if (c == 0) continue;
    bool neg = c < 0;
    T mag = neg ? T(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    if (i == 0)
      os << mag.get_str();
    else {
      if (!unit) os << mag.get_str() << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p) { return render(p); }
std::string to_string(const RatPoly& p) { return render(p); }

std::vector<std::string> coefficient_strings(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

std::vector<std::string> coefficient_strings(const RatPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return true;
  for (modp::u64 q : modp::primes_from(1u << 30, 4)) {
    if (mpz_fdiv_ui(p.leading().get_mpz_t(), q) == 0) continue;
    if (modp::is_squarefree(modp::reduce(p, q), q)) return true;
  }
  RatPoly r = to_rational(p);
  return gcd(r, r.derivative()).degree() == 0;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p;
  if (is_squarefree(p)) return primitive_part(to_rational(p));
  RatPoly r = to_rational(p);
  return primitive_part(divmod(r, gcd(r, r.derivative())).first);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  if (is_squarefree(p)) {
    out.emplace_back(primitive_part(to_rational(p)), 1);
    return out;
  }
  RatPoly f = monic(to_rational(p));
  RatPoly df = f.derivative();
  RatPoly b = gcd(f, df);
  RatPoly c = divmod(f, b).first;
  RatPoly d = divmod(df, b).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    RatPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(primitive_part(a), i);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
    ++i;
  }
  return out;
}

std::size_t max_coeff_bits(const IntPoly& p) {
  std::size_t b = 0;
  for (const auto& c : p.coeffs()) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

}  // namespace penner
