#include "penner/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "penner/error.hpp"
#include "penner/modular.hpp"
#include "penner/roots.hpp"

namespace penner {

namespace {

constexpr double kLog10of2 = 0.30102999566398120;

mpz_class coefficient_bound(const IntMatrix& m) {
  // Every coefficient is a sum of principal minors; Hadamard gives
  // |c| <= prod_i (1 + ||row_i||_2).
  mpz_class b = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    b *= r + 2;  // ceil(sqrt(s)) + 1
  }
  return b;
}

mpq_class row_sum_extreme(const RatMatrix& m, bool want_max) {
  mpq_class best;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
    if (i == 0 || (want_max ? s > best : s < best)) best = s;
  }
  return best;
}

}  // namespace

IntPoly char_poly_exact(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly::constant(1);
  const mpz_class target = 2 * coefficient_bound(m) + 1;
  std::vector<mpz_class> r(n + 1, 0);
  mpz_class modulus = 1;
  modp::u64 next = (1ull << 31) - (1ull << 20);
  while (modulus <= target) {
    const modp::u64 p = modp::primes_from(next, 1)[0];
    next = p + 1;
    modp::PolyP a = modp::charpoly(m, p);
    a.resize(n + 1, 0);
    const modp::u64 minv = modp::inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t j = 0; j <= n; ++j) {
      modp::u64 rj = mpz_fdiv_ui(r[j].get_mpz_t(), p);
      modp::u64 t = (a[j] + p - rj) % p * minv % p;
      r[j] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= static_cast<unsigned long>(p);
  }
  const mpz_class half = modulus / 2;
  for (auto& c : r)
    if (c > half) c -= modulus;
  return IntPoly(std::move(r));
}

RatPoly char_poly_exact(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  mpz_class d = 1;
  for (const auto& x : m.data()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = m(i, j).get_num() * (d / m(i, j).get_den());
  IntPoly cb = char_poly_exact(b);
  std::vector<mpq_class> c(n + 1);
  mpz_class dp = 1;
  for (std::size_t j = n + 1; j-- > 0;) {
    c[j] = mpq_class(cb.coeff(static_cast<int>(j)), dp);
    c[j].canonicalize();
    dp *= d;
  }
  return RatPoly(std::move(c));
}

RatPoly char_poly_faddeev(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  RatMatrix am(n, n);  // A * M_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    am = a * mk;
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RatPoly(std::move(c));
}

std::size_t rank_exact(const IntersectionMatrix& omega) { return rank(omega.matrix()); }

bool pf_certify(const ExactMatrix& m, const IntersectionMatrix& omega, const TwistWord& word) {
  if (m.rows() != omega.n()) throw Error(ErrorKind::DimensionMismatch, "matrix and intersection matrix sizes differ");
  if (omega.is_zero()) return false;
  return is_connected(graph_of(omega)) && is_general(word, omega.n());
}

bool is_primitive_nonnegative(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (!m.square() || n == 0) return false;
  std::vector<char> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) return false;
      b[i * n + j] = m(i, j) > 0;
    }
  // Wielandt: primitive iff B^e > 0 for e = (n-1)^2 + 1; squaring overshoots safely.
  const std::size_t e = (n - 1) * (n - 1) + 1;
  for (std::size_t pw = 1; pw < e; pw *= 2) {
    std::vector<char> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (b[i * n + k])
          for (std::size_t j = 0; j < n; ++j) c[i * n + j] |= b[k * n + j];
    b.swap(c);
  }
  return std::all_of(b.begin(), b.end(), [](char x) { return x != 0; });
}

PfValue pf_root(const IntPoly& charpoly, int digits, const mpq_class& lower, const mpq_class& upper) {
  IntPoly q = charpoly;
  {
    IntPoly quot;
    const IntPoly x1 = IntPoly::x_minus(1);
    while (q.degree() >= 1 && divide_exact(q, x1, quot)) q = quot;
  }
  const mpfr_prec_t out_bits = static_cast<mpfr_prec_t>(digits / kLog10of2) + 16;
  if (q.degree() < 1) {
    PfValue v{Real(1L, out_bits), 1, 1, digits};
    return v;
  }
  q = squarefree_part(q);
  int work = digits + 8;
  for (int attempt = 0; attempt < 4; ++attempt, work *= 2) {
    RootSet rs = find_roots(q, work);
    std::size_t best = 0;
    for (std::size_t i = 1; i < rs.size(); ++i)
      if (rs.roots[i].abs() > rs.roots[best].abs()) best = i;
    const Real& approx = rs.roots[best].re;
    if (approx.sign() <= 0) continue;
    // Exact bracket of half-width 10^-(digits+3) relative.
    mpq_class center = approx.to_rational();
    mpq_class eps(1);
    mpz_class ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, digits + 3);
    eps = mpq_class(1, ten) * (center > 1 ? center : mpq_class(1));
    mpq_class lo = center - eps, hi = center + eps;
    if (sign_at(q, lo) * sign_at(q, hi) >= 0) continue;
    if (hi < lower || lo > upper) continue;
    PfValue v{Real(center, out_bits), lo, hi, digits};
    return v;
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not bracket the Perron-Frobenius root");
}

PfValue pf_eigenvalue(const ExactMatrix& m, int digits) {
  if (!is_primitive_nonnegative(m))
    throw Error(ErrorKind::NotPerronFrobenius, "matrix is not primitive nonnegative");
  RatPoly cp = char_poly_exact(m);
  PfValue v = pf_root(primitive_part(cp), digits, row_sum_extreme(m, false), row_sum_extreme(m, true));
  return v;
}

std::pair<int, IntPoly> structure_split(const IntPoly& charpoly, std::size_t n, std::size_t r) {
  if (r > n) throw Error(ErrorKind::DivisionFailed, "rank exceeds dimension");
  const int e = static_cast<int>(n - r);
  IntPoly reduced;
  if (!divide_exact(charpoly, pow(IntPoly::x_minus(1), e), reduced))
    throw Error(ErrorKind::DivisionFailed, "(x-1)^" + std::to_string(e) + " does not divide the characteristic polynomial");
  mpz_class at1 = 0;
  for (const auto& c : reduced.coeffs()) at1 += c;
  if (at1 == 0) throw Error(ErrorKind::DivisionFailed, "reduced polynomial vanishes at 1");
  return {e, reduced};
}

int complexity(const IntPoly& p) { return p.degree() - multiplicity_of_one(p); }
int complexity(const RatPoly& p) { return p.degree() - multiplicity_of_one(p); }

int complexity(const std::vector<Real>& coeffs, double tol) {
  std::vector<Real> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return 0;
  mpfr_prec_t bits = 64;
  for (const auto& x : c) bits = std::max(bits, x.prec());
  RootSet rs = find_roots(c, 15, 2 * (bits + 128));
  int near_one = 0;
  const Real one(1L, rs.bits), t(tol, rs.bits);
  for (const auto& z : rs.roots) {
    Complex w = z - Complex(one, Real(rs.bits));
    if (w.abs() <= t) ++near_one;
  }
  return d - near_one;
}

bool is_reciprocal(const IntPoly& p, bool allow_sign) {
  const int d = p.degree();
  bool plus = true, minus = allow_sign;
  for (int i = 0; i <= d; ++i) {
    if (p[i] != p[d - i]) plus = false;
    if (p[i] != -p[d - i]) minus = false;
  }
  return plus || minus;
}

bool is_reciprocal(const RatPoly& p, bool allow_sign) {
  const int d = p.degree();
  bool plus = true, minus = allow_sign;
  for (int i = 0; i <= d; ++i) {
    if (p[i] != p[d - i]) plus = false;
    if (p[i] != -p[d - i]) minus = false;
  }
  return plus || minus;
}

SymplecticForm symplectic_form(const IntersectionMatrix& omega) {
  auto bp = bipartition(graph_of(omega));
  if (!bp) throw Error(ErrorKind::NotBipartite, "G(Omega) contains an odd cycle");
  SymplecticForm f;
  f.order = bp->a_block;
  f.order.insert(f.order.end(), bp->b_block.begin(), bp->b_block.end());
  f.a_size = bp->a_block.size();
  const std::size_t n = omega.n();
  f.delta = RatMatrix(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const Rational& w = omega(f.order[s] - 1, f.order[t] - 1);
      f.delta(s, t) = s < f.a_size ? w : Rational(-w);
    }
  return f;
}

namespace {
bool check_form(const SymplecticForm& f, const ExactMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix mp(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) mp(s, t) = m(f.order[s] - 1, f.order[t] - 1);
  return mp.transpose() * f.delta * mp == f.delta;
}
}  // namespace

bool symplectic_check(const IntersectionMatrix& omega, const ExactMatrix& m) {
  if (m.rows() != omega.n() || !m.square()) throw Error(ErrorKind::DimensionMismatch, "matrix size differs from Omega");
  return check_form(symplectic_form(omega), m);
}

bool symplectic_check_block(const IntersectionMatrix& omega, const ExactMatrix& m) {
  if (m.rows() != omega.n() || !m.square()) throw Error(ErrorKind::DimensionMismatch, "matrix size differs from Omega");
  SymplecticForm f = symplectic_form(omega);
  for (std::size_t s = 0; s < f.order.size(); ++s)
    if (f.order[s] != static_cast<int>(s + 1))
      throw Error(ErrorKind::BlocksNotContiguous, "index " + std::to_string(f.order[s]) + " sits at position " +
                                                      std::to_string(s + 1) + " of the block order");
  return check_form(f, m);
}

Rational height(const IntersectionMatrix& omega, const std::vector<Rational>& v) {
  if (v.size() != omega.n())
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " for n = " + std::to_string(omega.n()));
  Rational h = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) h += v[i] * omega(i, j) * v[j];
  }
  return h / 2;
}

SpectralReport spectral_report(const IntersectionMatrix& omega, const TwistWord& word, int digits) {
  return spectral_report(omega, word, twist_product_int(omega, word), digits);
}

SpectralReport spectral_report(const IntersectionMatrix& omega, const TwistWord& word, const IntMatrix& m,
                               int digits) {
  SpectralReport rep;
  rep.n = omega.n();
  rep.charpoly = char_poly_exact(m);
  rep.rank = rank_exact(omega);
  if (is_general(word, rep.n)) {
    auto [e, red] = structure_split(rep.charpoly, rep.n, rep.rank);
    rep.unit_part_exponent = e;
    rep.reduced_poly = std::move(red);
  } else {
    rep.unit_part_exponent = multiplicity_of_one(rep.charpoly);
    divide_exact(rep.charpoly, pow(IntPoly::x_minus(1), rep.unit_part_exponent), rep.reduced_poly);
  }
  rep.complexity = complexity(rep.charpoly);
  const RatMatrix mq = to_rational(m);
  rep.is_pf = pf_certify(mq, omega, word);
  if (!rep.is_pf) {
    if (omega.is_zero())
      rep.pf_failure = "intersection matrix is zero";
    else if (!is_connected(graph_of(omega)))
      rep.pf_failure = "G(Omega) is disconnected";
    else
      for (std::size_t i = 1; i <= rep.n; ++i)
        if (std::find(word.gamma().begin(), word.gamma().end(), static_cast<int>(i)) == word.gamma().end()) {
          rep.pf_failure = "generator " + std::to_string(i) + " unused";
          break;
        }
    return rep;
  }
  RatMatrix ipo = RatMatrix::identity(rep.n) + omega.matrix();
  mpq_class lower = row_sum_extreme(ipo, false);
  mpq_class upper = row_sum_extreme(mq, true);
  rep.pf = pf_root(rep.reduced_poly, digits, lower, upper);
  return rep;
}

}  // namespace penner
