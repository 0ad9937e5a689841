#include "penner/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "penner/error.hpp"

namespace penner {

namespace {

constexpr double kLog10of2 = 0.30102999566398120;

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|a_i|), so roots of wildly different magnitudes start near their
// own scale.
std::vector<Complex> initial_points(const std::vector<Real>& a, mpfr_prec_t bits) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<int> idx;
  std::vector<double> la;
  for (int i = 0; i <= n; ++i)
    if (!a[i].is_zero()) {
      idx.push_back(i);
      la.push_back(a[i].log_abs());
    }
  std::vector<int> hull;  // positions into idx
  for (int t = 0; t < static_cast<int>(idx.size()); ++t) {
    while (hull.size() >= 2) {
      int p0 = hull[hull.size() - 2], p1 = hull.back();
      double cross = (idx[p1] - idx[p0]) * (la[t] - la[p0]) - (la[p1] - la[p0]) * (idx[t] - idx[p0]);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(t);
  }
  std::vector<Complex> z;
  z.reserve(n);
  const Real twopi = ldexp(pi(bits), 1);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i0 = idx[hull[h]], i1 = idx[hull[h + 1]];
    const int m = i1 - i0;
    const double logr = (la[hull[h]] - la[hull[h + 1]]) / m;
    const Real r = exp(Real(logr, bits));
    for (int j = 0; j < m; ++j) {
      double frac = static_cast<double>(j) / m + static_cast<double>(h) / n + 0.11;
      Real ang = twopi * Real(frac, bits);
      z.emplace_back(r * cos(ang), r * sin(ang));
    }
  }
  return z;
}

std::vector<Complex> to_complex(const std::vector<Real>& a, mpfr_prec_t bits) {
  std::vector<Complex> c;
  c.reserve(a.size());
  for (const auto& x : a) c.emplace_back(x.with_prec(bits), Real(bits));
  return c;
}

// Inclusion radius n*(|p(z)| + rounding)/|p'(z)|.
Real inclusion_radius(const std::vector<Complex>& c, const std::vector<Real>& absc, const Complex& z) {
  const mpfr_prec_t bits = z.prec();
  Complex pz(bits), dz(bits);
  eval_with_derivative(c, z, pz, dz);
  Real az = z.abs();
  Real bound(bits);
  for (auto it = absc.rbegin(); it != absc.rend(); ++it) bound = bound * az + *it;
  // Horner rounding error is bounded by about 2n ulp of the absolute sum.
  const long n = static_cast<long>(c.size());
  Real err = ldexp(bound, -static_cast<long>(bits) + 2) * Real(2 * n + 2, bits);
  Real num = pz.abs() + err;
  Real den = dz.abs();
  if (den.is_zero()) return Real(std::numeric_limits<double>::infinity(), bits);
  return Real(n - 1, bits) * num / den;
}

void pair_conjugates(RootSet& rs) {
  const std::size_t n = rs.roots.size();
  rs.conj.assign(n, n);
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < n; ++i) {
    if (abs(rs.roots[i].im) <= rs.radius[i]) {
      rs.conj[i] = i;
    } else {
      (rs.roots[i].im.sign() > 0 ? upper : lower).push_back(i);
    }
  }
  // Unbalanced counts only happen when radii are loose; demote the
  // least-imaginary roots of the larger side to real.
  auto by_im = [&](std::size_t a, std::size_t b) { return abs(rs.roots[a].im) < abs(rs.roots[b].im); };
  while (upper.size() != lower.size()) {
    auto& big = upper.size() > lower.size() ? upper : lower;
    auto it = std::min_element(big.begin(), big.end(), by_im);
    rs.conj[*it] = *it;
    big.erase(it);
  }
  std::vector<bool> used(n, false);
  for (std::size_t u : upper) {
    std::size_t best = n;
    Real bestd(rs.bits);
    for (std::size_t l : lower) {
      if (used[l]) continue;
      Real d = (rs.roots[u] - rs.roots[l].conj()).abs();
      if (best == n || d < bestd) {
        best = l;
        bestd = d;
      }
    }
    used[best] = true;
    rs.conj[u] = best;
    rs.conj[best] = u;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (rs.conj[i] == i) rs.roots[i].im = Real(rs.roots[i].im.prec());
}

}  // namespace

std::vector<Complex> aberth(const std::vector<Real>& coeffs, mpfr_prec_t bits, const std::vector<Complex>* init) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  std::vector<Complex> c = to_complex(coeffs, bits);
  std::vector<Complex> z;
  if (init && static_cast<int>(init->size()) == n) {
    for (const auto& w : *init) z.push_back(w.with_prec(bits));
  } else {
    z = initial_points(coeffs, bits);
  }
  if (n == 1) {
    z[0] = Complex(-(c[0].re / c[1].re), Real(bits));
    return z;
  }
  std::vector<Real> absc;
  for (const auto& x : coeffs) absc.push_back(abs(x.with_prec(bits)));
  const Real noise_scale(4L * n + 4, bits);
  std::vector<bool> done(n, false);
  const long tol_exp = -static_cast<long>(bits) + 8;
  const int max_iter = 200 + 20 * n;
  Complex pz(bits), dz(bits);
  const Complex one(Real(1L, bits), Real(bits));
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      eval_with_derivative(c, z[i], pz, dz);
      if (pz.is_zero()) {
        done[i] = true;
        continue;
      }
      Complex ratio = dz.is_zero() ? Complex(Real(1e-3, bits), Real(bits)) : pz / dz;
      Complex s(bits);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex d = z[i] - z[j];
        if (d.is_zero()) d.re = ldexp(Real(1L, bits), tol_exp);
        s += one / d;
      }
      Complex w = ratio / (one - ratio * s);
      z[i] -= w;
      Real scale = max(z[i].abs(), Real(1L, bits));
      // Once |p(z)| is at the Horner rounding level further steps only move
      // z around inside the noise.
      Real az = z[i].abs(), sum(bits);
      for (auto a = absc.rbegin(); a != absc.rend(); ++a) sum = sum * az + *a;
      if (w.abs() <= ldexp(scale, tol_exp) || pz.abs() <= ldexp(sum, -static_cast<long>(bits)) * noise_scale)
        done[i] = true;
      else
        all = false;
    }
    if (all) break;
  }
  return z;
}

RootSet find_roots(const std::vector<Real>& coeffs_in, int digits, mpfr_prec_t max_bits) {
  std::vector<Real> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw Error(ErrorKind::PreconditionViolated, "roots of the zero polynomial");
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros].is_zero()) ++zeros;
  std::vector<Real> core(coeffs.begin() + zeros, coeffs.end());

  long maxexp = 0, minexp = 0;
  for (const auto& x : core)
    if (!x.is_zero()) {
      maxexp = std::max(maxexp, x.exponent());
      minexp = std::min(minexp, x.exponent());
    }
  mpfr_prec_t bits = static_cast<mpfr_prec_t>((maxexp - minexp) + digits / kLog10of2 + 64);
  for (const auto& x : coeffs_in) bits = std::max(bits, x.prec());
  if (max_bits == 0) max_bits = 16 * bits;
  bits = std::min(bits, max_bits);

  RootSet rs;
  std::vector<Complex> prev;
  while (true) {
    std::vector<Complex> z = aberth(core, bits, prev.empty() ? nullptr : &prev);
    std::vector<Complex> c = to_complex(core, bits);
    std::vector<Real> absc;
    for (const auto& x : core) absc.push_back(abs(x.with_prec(bits)));
    rs.roots.clear();
    rs.radius.clear();
    bool ok = true;
    for (const auto& r : z) {
      Real rad = inclusion_radius(c, absc, r);
      Real target = ldexp(max(r.abs(), Real(1L, bits)), -static_cast<long>(std::ceil(digits / kLog10of2)));
      if (!(rad <= target)) ok = false;
      rs.radius.push_back(rad);
    }
    rs.roots = std::move(z);
    rs.bits = bits;
    rs.resolved = ok;
    if (ok || bits >= max_bits) break;
    prev = rs.roots;
    bits = std::min<mpfr_prec_t>(2 * bits, max_bits);
  }
  for (std::size_t i = 0; i < zeros; ++i) {
    rs.roots.emplace_back(Real(bits), Real(bits));
    rs.radius.emplace_back(bits);
  }
  pair_conjugates(rs);
  return rs;
}

RootSet find_roots(const IntPoly& p, int digits, mpfr_prec_t max_bits) {
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(max_coeff_bits(p) + digits / kLog10of2 + 64);
  return find_roots(to_real(p, bits), digits, max_bits);
}

RootSet find_roots(const RatPoly& p, int digits, mpfr_prec_t max_bits) {
  return find_roots(primitive_part(p), digits, max_bits);
}

}  // namespace penner
