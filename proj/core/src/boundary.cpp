#include "penner/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "penner/error.hpp"
#include "penner/factor.hpp"
#include "penner/graph.hpp"
#include "penner/roots.hpp"
#include "penner/spectral.hpp"

namespace penner {

namespace {

constexpr double kLog10of2 = 0.30102999566398120;

void check_index(std::size_t n, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > n)
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

void check_supported(const IntersectionMatrix& omega, const std::vector<int>& gamma) {
  if (gamma.size() < 2) throw Error(ErrorKind::NotSupported, "closed path needs at least two vertices");
  for (int v : gamma) check_index(omega.n(), v);
  const std::size_t k = gamma.size();
  for (std::size_t t = 0; t < k; ++t) {
    const int a = gamma[t], b = gamma[(t + 1) % k];
    if (a == b || omega(a - 1, b - 1) == 0)
      throw Error(ErrorKind::NotSupported,
                  "edge " + std::to_string(a) + "-" + std::to_string(b) + " is not in G(Omega)");
  }
}

// Every eigenvalue of a monic integer polynomial, with multiplicity.
std::vector<Complex> all_roots(const IntPoly& u, int digits) {
  std::vector<Complex> out;
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(digits / kLog10of2) + 32;
  IntPoly g = u;
  const int m1 = multiplicity_of_one(g);
  if (m1) {
    IntPoly q;
    divide_exact(g, pow(IntPoly::x_minus(1), m1), q);
    g = q;
    for (int i = 0; i < m1; ++i) out.emplace_back(Real(1L, bits), Real(bits));
  }
  if (g.degree() >= 1)
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
      RootSet rs = find_roots(part, digits);
      for (int t = 0; t < mult; ++t)
        for (const auto& z : rs.roots) out.push_back(z);
    }
  return out;
}

}  // namespace

BoundaryPoint::BoundaryPoint(IntersectionMatrix rep) : rep_(std::move(rep)) {
  if (rep_.is_zero()) throw Error(ErrorKind::PreconditionViolated, "boundary point needs a nonzero representative");
}

ExactMatrix q_arrow(const BoundaryPoint& bp, int i, int j) {
  const IntersectionMatrix& om = bp.representative();
  check_index(om.n(), i);
  check_index(om.n(), j);
  const Rational& w = om(i - 1, j - 1);
  if (w == 0)
    throw Error(ErrorKind::NotAnEdge, "omega_(" + std::to_string(i) + "," + std::to_string(j) + ") = 0");
  ExactMatrix q = ExactMatrix::identity(om.n());
  for (std::size_t c = 0; c < om.n(); ++c) q(j - 1, c) -= om(i - 1, c) / w;
  return q;
}

ExactMatrix p_gamma(const BoundaryPoint& bp, const std::vector<int>& gamma) {
  const IntersectionMatrix& om = bp.representative();
  check_supported(om, gamma);
  const std::size_t n = om.n(), k = gamma.size();
  ExactMatrix p = ExactMatrix::identity(n);
  for (std::size_t t = 0; t < k; ++t) {
    const int j = gamma[t], i = gamma[(t + 1) % k];
    // Left multiplication by Q_{i<-j} rewrites row j only.
    const Rational& w = om(i - 1, j - 1);
    std::vector<Rational> row(n);
    for (std::size_t s = 0; s < n; ++s) {
      const Rational& c = om(i - 1, s);
      if (c == 0) continue;
      for (std::size_t col = 0; col < n; ++col) row[col] += c * p(s, col);
    }
    for (std::size_t col = 0; col < n; ++col) p(j - 1, col) -= row[col] / w;
  }
  return p;
}

LimitMap f_gamma(const BoundaryPoint& bp, const std::vector<int>& gamma) {
  const IntersectionMatrix& om = bp.representative();
  ExactMatrix p = p_gamma(bp, gamma);
  const std::size_t n = om.n();
  const std::size_t i1 = gamma.front() - 1;
  std::size_t m = n;
  for (std::size_t c = 0; c < n; ++c)
    if (om(i1, c) != 0) {
      m = c;
      break;
    }
  if (m == n) throw Error(ErrorKind::DegenerateRow, "row " + std::to_string(i1 + 1) + " of Omega is zero");
  LimitMap lm;
  lm.pivot = static_cast<int>(m + 1);
  std::vector<std::size_t> coords;
  for (std::size_t t = 0; t < n; ++t) {
    if (t == m) continue;
    std::vector<Rational> b(n);
    b[t] = 1;
    b[m] = -om(i1, t) / om(i1, m);
    lm.w_basis.push_back(std::move(b));
    coords.push_back(t);
  }
  lm.matrix = RatMatrix(n - 1, n - 1);
  for (std::size_t c = 0; c < coords.size(); ++c) {
    std::vector<Rational> img = p.apply(lm.w_basis[c]);
    Rational check = 0;
    for (std::size_t s = 0; s < n; ++s) check += om(i1, s) * img[s];
    if (check != 0) throw Error(ErrorKind::PreconditionViolated, "image of P_gamma leaves W_gamma");
    for (std::size_t r = 0; r < coords.size(); ++r) lm.matrix(r, c) = img[coords[r]];
  }
  lm.charpoly = char_poly_exact(lm.matrix);
  return lm;
}

std::vector<int> insert_backtracking(const std::vector<int>& gamma, int position, int vertex) {
  if (position < 1 || static_cast<std::size_t>(position) > gamma.size())
    throw Error(ErrorKind::IndexOutOfRange, "insertion position " + std::to_string(position));
  std::vector<int> out(gamma.begin(), gamma.begin() + position);
  out.push_back(vertex);
  out.push_back(gamma[position - 1]);
  out.insert(out.end(), gamma.begin() + position, gamma.end());
  return out;
}

bool homotopy_invariance_check(const BoundaryPoint& bp, const std::vector<int>& gamma, int position, int vertex) {
  std::vector<int> g2 = insert_backtracking(gamma, position, vertex);
  LimitMap a = f_gamma(bp, gamma);
  LimitMap b = f_gamma(bp, g2);
  return a.pivot == b.pivot && a.w_basis == b.w_basis && a.matrix == b.matrix;
}

Real eigenvector_bound(const IntersectionMatrix& om, const TwistWord& word, mpfr_prec_t bits) {
  const auto& g = word.gamma();
  const long kk = static_cast<long>(g.size());
  Rational inf = 0, mn = -1;
  for (const auto& x : om.matrix().data()) inf = std::max(inf, x);
  for (std::size_t t = 0; t < g.size(); ++t) {
    const Rational& w = om(g[t] - 1, g[(t + 1) % g.size()] - 1);
    if (mn < 0 || w < mn) mn = w;
  }
  Rational num = 1, den = 1;
  for (long t = 0; t < kk; ++t) num *= 2;
  for (long t = 0; t < kk - 2; ++t) num *= word.p_max();
  for (long t = 0; t < kk - 1; ++t) num *= inf;
  for (long t = 0; t < kk; ++t) den *= word.p_min() * mn;
  return Real(Rational(num / den), bits);
}

EigenvectorEstimate eigenvector_asymptotics(const IntersectionMatrix& omega, const TwistWord& word,
                                            const Rational& k, int digits) {
  if (k <= 0) throw Error(ErrorKind::PreconditionViolated, "scale must be positive");
  IntersectionMatrix om = scale(omega, k);
  word.check_dimension(om.n());
  const auto& g = word.gamma();
  if (g.size() < 2 || !word_supported(word, graph_of(om)))
    throw Error(ErrorKind::PreconditionViolated, "path is not supported in G(Omega)");
  if (!is_general(word, om.n())) throw Error(ErrorKind::PreconditionViolated, "path misses a vertex");
  Rational mn = -1;
  for (std::size_t t = 0; t < g.size(); ++t) {
    const Rational& w = om(g[t] - 1, g[(t + 1) % g.size()] - 1);
    if (mn < 0 || w < mn) mn = w;
  }
  if (mn < 1) throw Error(ErrorKind::PreconditionViolated, "min entry along the path is " + mn.get_str() + " < 1");

  const ExactMatrix m = twist_product(om, word);
  PfValue pf = pf_eigenvalue(m, digits);
  const std::size_t n = om.n();
  std::size_t ebits = 0;
  for (const auto& x : m.data())
    ebits = std::max(ebits, mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2));
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(digits / kLog10of2) + static_cast<mpfr_prec_t>(ebits) + 64;
  const Real lambda = pf.value.with_prec(bits);

  // Null vector of M^T - lambda I by complete pivoting.
  std::vector<std::vector<Real>> a(n, std::vector<Real>(n, Real(bits)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Real(m(j, i), bits);
      if (i == j) a[i][j] -= lambda;
    }
  std::vector<std::size_t> col(n);
  for (std::size_t j = 0; j < n; ++j) col[j] = j;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    std::size_t bi = s, bj = s;
    Real best = abs(a[s][s]);
    for (std::size_t i = s; i < n; ++i)
      for (std::size_t j = s; j < n; ++j) {
        Real v = abs(a[i][j]);
        if (v > best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    std::swap(a[s], a[bi]);
    if (bj != s) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][s], a[i][bj]);
      std::swap(col[s], col[bj]);
    }
    for (std::size_t i = s + 1; i < n; ++i) {
      Real f = a[i][s] / a[s][s];
      for (std::size_t j = s; j < n; ++j) a[i][j] -= f * a[s][j];
    }
  }
  std::vector<Real> y(n, Real(bits));
  y[n - 1] = Real(1L, bits);
  for (std::size_t s = n - 1; s-- > 0;) {
    Real acc(bits);
    for (std::size_t j = s + 1; j < n; ++j) acc += a[s][j] * y[j];
    y[s] = -acc / a[s][s];
  }
  std::vector<Real> v(n, Real(bits));
  Real sum(bits);
  for (std::size_t s = 0; s < n; ++s) {
    v[col[s]] = y[s];
    sum += y[s];
  }
  for (auto& x : v) x /= sum;

  // Target p_1 e_{i1}^T Omega + omega_{i2 i1}^{-1} e_{i2}^T Omega.
  const std::size_t i1 = g[0] - 1, i2 = g[1] - 1;
  const Rational inv21 = 1 / om(i2, i1);
  std::vector<Real> t(n, Real(bits));
  for (std::size_t c = 0; c < n; ++c)
    t[c] = Real(Rational(word.powers()[0] * om(i1, c) + inv21 * om(i2, c)), bits);

  // min_s max_j |s v_j - t_j|: the optimum sits where an increasing line
  // meets a decreasing one.
  auto err = [&](const Real& s) {
    Real e(bits);
    for (std::size_t j = 0; j < n; ++j) e = max(e, abs(s * v[j] - t[j]));
    return e;
  };
  Real best_s(bits), best_e(bits);
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Real den = v[i] + v[j];
      if (den.is_zero()) continue;
      Real s = (t[i] + t[j]) / den;
      Real e = err(s);
      if (first || e < best_e) {
        best_s = s;
        best_e = e;
        first = false;
      }
    }
  EigenvectorEstimate out{best_e, eigenvector_bound(om, word, bits), lambda, best_s, {}};
  for (auto& x : v) out.eigenvector.push_back(x * best_s);
  return out;
}

void fit_growth(const std::vector<RayRow>& rows, std::vector<double>& exponents, std::vector<double>& constants) {
  exponents.clear();
  constants.clear();
  if (rows.size() < 2) return;
  const std::size_t m = rows.front().magnitudes.size();
  const double cnt = static_cast<double>(rows.size());
  for (std::size_t j = 0; j < m; ++j) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
      const double x = std::log(r.k.get_d());
      const double y = r.magnitudes[j].log_abs();
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double a = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    // The constant belongs to the nominal power law c k^e with e = round(a);
    // the free intercept would absorb the slope error instead.
    const double e = std::round(a);
    exponents.push_back(a);
    constants.push_back(std::exp((sy - e * sx) / cnt));
  }
}

RayReport ray_convergence_experiment(const IntersectionMatrix& omega, const TwistWord& word,
                                     const std::vector<Rational>& scales, int digits) {
  word.check_dimension(omega.n());
  if (!is_general(word, omega.n())) throw Error(ErrorKind::NotGeneral, "path misses a vertex");
  RayReport rep;
  rep.supported = word.size() >= 2 && word_supported(word, graph_of(omega));
  std::vector<Real> limit;
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(digits / kLog10of2) + 32;
  if (rep.supported) {
    rep.limit = f_gamma(BoundaryPoint(omega), word.gamma()).charpoly;
    limit = to_real(*rep.limit, bits);
  }
  for (const Rational& k : scales) {
    IntersectionMatrix ok = scale(omega, k);
    RayRow row;
    row.k = k;
    row.charpoly = char_poly_exact(twist_product(ok, word));
    const IntPoly u = primitive_part(row.charpoly);
    std::vector<Complex> eig = all_roots(u, digits);
    std::vector<Real> mags;
    for (const auto& z : eig) mags.push_back(z.abs());
    std::sort(mags.begin(), mags.end(), [](const Real& a, const Real& b) { return a > b; });
    row.magnitudes = mags;
    if (rep.supported) {
      PfValue pf = pf_root(u, digits, 0, std::numeric_limits<long>::max());
      row.lambda = pf.value;
      const mpfr_prec_t wb = bits + static_cast<mpfr_prec_t>(max_coeff_bits(u));
      std::vector<Real> c = to_real(row.charpoly, wb);
      row.quotient = deflate(c, row.lambda.with_prec(wb));
      double dist = 0;
      for (std::size_t i = 0; i < std::max(row.quotient.size(), limit.size()); ++i) {
        Real a = i < row.quotient.size() ? row.quotient[i] : Real(wb);
        Real b = i < limit.size() ? limit[i].with_prec(wb) : Real(wb);
        dist = std::max(dist, abs(a - b).to_double());
      }
      row.distance = dist;
    } else {
      row.lambda = mags.empty() ? Real(bits) : mags.front();
      row.distance = std::numeric_limits<double>::quiet_NaN();
    }
    rep.rows.push_back(std::move(row));
  }
  if (rep.supported) {
    std::size_t start = rep.rows.empty() ? 0 : rep.rows.size() - 1;
    while (start > 0 && rep.rows[start].distance < rep.rows[start - 1].distance) --start;
    rep.tail_start = start;
    rep.decreasing = rep.rows.size() >= 2 && start == 0;
  } else {
    fit_growth(rep.rows, rep.exponents, rep.constants);
  }
  return rep;
}

}  // namespace penner
