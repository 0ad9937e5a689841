#include "penner/factor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "penner/error.hpp"
#include "penner/modular.hpp"
#include "penner/roots.hpp"

namespace penner {

namespace {

constexpr double kLog10of2 = 0.30102999566398120;

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct RootClass {
  std::vector<std::size_t> members;
  int size = 0;
  double resid = 0;   // fractional part of the trace contribution
  double logabs = 0;  // log of the norm contribution
};

std::vector<RootClass> classes_of(const RootSet& rs) {
  std::vector<RootClass> out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::size_t j = rs.conj[i];
    if (j < i) continue;
    RootClass c;
    c.members.push_back(i);
    Real tr = rs.roots[i].re;
    double la = rs.roots[i].abs().log_abs();
    if (j != i) {
      c.members.push_back(j);
      tr = ldexp(tr, 1);
      la *= 2;
    }
    c.size = static_cast<int>(c.members.size());
    c.resid = (tr - Real(tr.round_to_integer(), tr.prec())).to_double();
    c.logabs = la;
    out.push_back(std::move(c));
  }
  return out;
}

// Monic integer polynomial with the given roots, if the rounding is clean.
bool reconstruct(const RootSet& rs, const std::vector<const RootClass*>& pick, IntPoly& out) {
  const mpfr_prec_t bits = rs.bits;
  std::vector<Real> c{Real(1L, bits)};
  auto mul_by = [&](const std::vector<Real>& f) {
    std::vector<Real> r(c.size() + f.size() - 1, Real(bits));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) r[i + j] += c[i] * f[j];
    c = std::move(r);
  };
  for (const RootClass* cl : pick) {
    const Complex& z = rs.roots[cl->members[0]];
    if (cl->size == 1)
      mul_by({-z.re, Real(1L, bits)});
    else
      mul_by({z.norm(), -ldexp(z.re, 1), Real(1L, bits)});
  }
  std::vector<mpz_class> ic;
  const Real quarter(0.25, bits);
  for (const auto& x : c) {
    mpz_class r = x.round_to_integer();
    if (abs(x - Real(r, bits)) > quarter) return false;
    ic.push_back(r);
  }
  out = IntPoly(std::move(ic));
  return true;
}

// Factors a monic squarefree polynomial with nonzero constant term.
bool factor_squarefree(const IntPoly& g_in, std::vector<IntPoly>& out) {
  if (g_in.degree() <= 1) {
    out.push_back(g_in);
    return true;
  }
  std::vector<int> adm = admissible_factor_degrees(g_in);
  if (adm.empty()) {
    out.push_back(g_in);
    return true;
  }
  const int digits =
      static_cast<int>(max_coeff_bits(g_in) * kLog10of2) + g_in.degree() + 20;
  RootSet rs = find_roots(g_in, digits);
  bool certified = rs.resolved;
  std::vector<RootClass> classes = classes_of(rs);
  std::vector<bool> used(classes.size(), false);
  IntPoly g = g_in;
  int min_deg = 1;

  while (true) {
    const int deg = g.degree();
    if (deg <= 1) break;
    std::vector<int> degs = admissible_factor_degrees(g);
    bool found = false;
    IntPoly fac, cof;
    std::vector<std::size_t> chosen;
    const mpz_class& g0 = g[0];
    const double log_g0 = std::log(std::fabs(mpz_get_d(g0.get_mpz_t())));
    const bool unit_const = abs(g0) == 1;

    std::vector<std::size_t> avail;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (!used[c]) avail.push_back(c);

    for (int d : degs) {
      if (d < min_deg || 2 * d > deg) continue;
      std::vector<const RootClass*> pick;
      std::vector<std::size_t> pick_idx;
      std::function<bool(std::size_t, int, double, double)> dfs = [&](std::size_t from, int size, double resid,
                                                                       double logabs) -> bool {
        if (size == d) {
          if (std::fabs(resid - std::round(resid)) > 1e-6) return false;
          if (unit_const) {
            if (std::fabs(logabs) > 1e-6) return false;
          } else if (logabs < 600 && std::isfinite(log_g0)) {
            double v = std::exp(logabs);
            double rv = std::round(v);
            if (std::fabs(v - rv) > 1e-6 * std::max(1.0, v) || rv < 1 || logabs > log_g0 + 1e-6) return false;
          }
          IntPoly cand;
          if (!reconstruct(rs, pick, cand)) return false;
          IntPoly q;
          if (!divide_exact(g, cand, q)) return false;
          fac = cand;
          cof = q;
          chosen = pick_idx;
          return true;
        }
        for (std::size_t t = from; t < avail.size(); ++t) {
          const RootClass& cl = classes[avail[t]];
          if (size + cl.size > d) continue;
          pick.push_back(&cl);
          pick_idx.push_back(avail[t]);
          if (dfs(t + 1, size + cl.size, resid + cl.resid, logabs + cl.logabs)) return true;
          pick.pop_back();
          pick_idx.pop_back();
        }
        return false;
      };
      if (dfs(0, 0, 0.0, 0.0)) {
        found = true;
        min_deg = d;
        break;
      }
    }
    if (!found) break;
    out.push_back(fac);
    for (std::size_t c : chosen) used[c] = true;
    g = cof;
  }
  out.push_back(g);
  return certified;
}

}  // namespace

IntPoly Factorization::product() const {
  IntPoly r = IntPoly::constant(1);
  for (const auto& [f, m] : factors) r = r * pow(f, m);
  return r;
}

std::vector<int> admissible_factor_degrees(const IntPoly& f, std::size_t primes) {
  const int d = f.degree();
  if (d <= 1) return {};
  std::vector<char> possible(d + 1, 1);
  std::size_t used = 0;
  modp::u64 next = 1u << 20;
  for (std::size_t tried = 0; used < primes && tried < 4 * primes; ++tried) {
    const modp::u64 p = modp::primes_from(next, 1)[0];
    next = p + 1;
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    modp::PolyP fp = modp::reduce(f, p);
    if (!modp::is_squarefree(fp, p)) continue;
    ++used;
    std::vector<char> sums(d + 1, 0);
    sums[0] = 1;
    for (int deg : modp::factor_degrees(fp, p))
      for (int s = d; s >= deg; --s)
        if (sums[s - deg]) sums[s] = 1;
    bool any = false;
    for (int s = 1; s < d; ++s) {
      possible[s] = possible[s] && sums[s];
      any = any || possible[s];
    }
    if (!any) break;
  }
  std::vector<int> out;
  for (int s = 1; s < d; ++s)
    if (possible[s]) out.push_back(s);
  return out;
}

Factorization factor_monic(const IntPoly& p) {
  if (!p.is_monic()) throw Error(ErrorKind::PreconditionViolated, "polynomial is not monic");
  Factorization result;
  result.certified = true;
  IntPoly g = p;
  // x^m
  int xm = 0;
  while (g.degree() >= 1 && g[0] == 0) {
    std::vector<mpz_class> c(g.coeffs().begin() + 1, g.coeffs().end());
    g = IntPoly(std::move(c));
    ++xm;
  }
  if (xm) result.factors.emplace_back(IntPoly::monomial(1), xm);
  // (x-1)^m by exact division
  const int m1 = multiplicity_of_one(g);
  if (m1) {
    IntPoly q;
    divide_exact(g, pow(IntPoly::x_minus(1), m1), q);
    g = q;
    result.factors.emplace_back(IntPoly::x_minus(1), m1);
  }
  if (g.degree() >= 1) {
    for (auto& [part, mult] : squarefree_decomposition(g)) {
      std::vector<IntPoly> irr;
      if (!factor_squarefree(part, irr)) result.certified = false;
      for (auto& f : irr) result.factors.emplace_back(std::move(f), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return result;
}

PfFactor pf_factor(const IntPoly& reduced, const PfValue& lambda, const mpq_class& lower, const mpq_class& upper) {
  const Factorization fac = factor_monic(reduced);
  PfValue cur = lambda;
  for (int attempt = 0; attempt <= 5; ++attempt) {
    // Rank factors by |f(lambda)| and require an exact sign change for the
    // best one and for no other.
    std::size_t best = fac.factors.size();
    Real best_val(cur.value.prec());
    int changes = 0;
    std::size_t changed = fac.factors.size();
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      const IntPoly& f = fac.factors[i].first;
      if (sign_at(f, cur.lo) * sign_at(f, cur.hi) < 0) {
        ++changes;
        changed = i;
      }
      Real v(cur.value.prec());
      for (int t = f.degree(); t >= 0; --t) v = v * cur.value + Real(f[t], cur.value.prec());
      v = abs(v);
      if (best == fac.factors.size() || v < best_val) {
        best = i;
        best_val = v;
      }
    }
    if (changes == 1 && changed == best) {
      PfFactor out;
      out.factor = fac.factors[best].first;
      out.degree = out.factor.degree();
      out.lambda = cur;
      return out;
    }
    if (attempt == 5) break;
    cur = pf_root(reduced, cur.digits * 4, lower, upper);
  }
  throw Error(ErrorKind::AmbiguousRootAssignment,
              "no unique irreducible factor changes sign around lambda at " + std::to_string(cur.digits) + " digits");
}

int degree_of_pf_root(const SpectralReport& report) {
  if (!report.is_pf || !report.pf)
    throw Error(ErrorKind::NotPerronFrobenius, report.pf_failure.empty() ? "report is not PF" : report.pf_failure);
  return pf_factor(report.reduced_poly, *report.pf, report.pf->lo, report.pf->hi).degree;
}

std::vector<Real> deflate(const std::vector<Real>& coeffs, const Real& r, Real* remainder) {
  const std::size_t n = coeffs.size();
  if (n == 0) return {};
  std::vector<Real> q(n - 1, Real(r.prec()));
  Real acc = coeffs[n - 1].with_prec(std::max(r.prec(), coeffs[n - 1].prec()));
  for (std::size_t i = n - 1; i-- > 0;) {
    q[i] = acc;
    acc = acc * r + coeffs[i];
  }
  if (remainder) *remainder = acc;
  return q;
}

namespace {

// Index of the factor owning the root nearest to z.
std::size_t owning_factor(const std::vector<RootSet>& factor_roots, const Complex& z) {
  std::size_t best = 0;
  Real bestd(z.prec());
  bool first = true;
  for (std::size_t f = 0; f < factor_roots.size(); ++f)
    for (const auto& r : factor_roots[f].roots) {
      Real d = (r.with_prec(z.prec()) - z).abs();
      if (first || d < bestd) {
        best = f;
        bestd = d;
        first = false;
      }
    }
  return best;
}

}  // namespace

ConvergenceReport convergence_diagnostic(const std::vector<ConvergenceInput>& seq, const std::vector<Real>& v,
                                         int digits) {
  ConvergenceReport rep;
  const mpfr_prec_t vbits = static_cast<mpfr_prec_t>(digits / kLog10of2) + 32;
  {
    std::vector<Real> vt = v;
    while (!vt.empty() && vt.back().is_zero()) vt.pop_back();
    if (vt.size() >= 2) {
      RootSet vr = find_roots(vt, 12, 4 * vbits);
      const Real tiny(1e-8, vbits), one(1L, vbits);
      for (const auto& z : vr.roots) {
        if (z.abs() <= tiny) continue;
        if ((z - Complex(one, Real(vbits))).abs() <= tiny) continue;
        rep.tracked_roots.push_back(z);
      }
    }
  }
  for (const auto& in : seq) {
    const mpfr_prec_t bits = std::max<mpfr_prec_t>(in.lambda.prec(), vbits + max_coeff_bits(in.u));
    std::vector<Real> c = to_real(in.u, bits);
    Real rem(bits);
    ConvergenceRow row;
    row.lambda = in.lambda;
    row.quotient = deflate(c, in.lambda.with_prec(bits), &rem);
    Real scale(bits);
    const Real al = abs(in.lambda.with_prec(bits));
    for (std::size_t i = c.size(); i-- > 0;) scale = scale * al + abs(c[i]);
    Real tol = ldexp(scale, -static_cast<long>(digits / (2 * kLog10of2)));
    if (abs(rem) > tol)
      throw Error(ErrorKind::RootMismatch, "lambda = " + in.lambda.to_string(20) + " is not a root of u");
    double dist = 0;
    for (std::size_t i = 0; i < std::max(row.quotient.size(), v.size()); ++i) {
      Real a = i < row.quotient.size() ? row.quotient[i] : Real(bits);
      Real b = i < v.size() ? v[i].with_prec(bits) : Real(bits);
      dist = std::max(dist, abs(a - b).to_double());
    }
    row.distance = dist;
    if (!rep.tracked_roots.empty()) {
      Factorization fac = factor_monic(in.u);
      std::vector<RootSet> fr;
      for (const auto& [f, m] : fac.factors) fr.push_back(find_roots(f, 20));
      const Complex lam(in.lambda.with_prec(bits), Real(bits));
      const std::size_t lf = owning_factor(fr, lam);
      for (const auto& theta : rep.tracked_roots) row.same_factor.push_back(owning_factor(fr, theta.with_prec(bits)) == lf);
    }
    rep.rows.push_back(std::move(row));
  }
  rep.lambda_diverging = rep.rows.size() >= 2;
  rep.distances_decreasing = rep.rows.size() >= 2;
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    if (!(rep.rows[i].lambda > rep.rows[i - 1].lambda)) rep.lambda_diverging = false;
    if (!(rep.rows[i].distance < rep.rows[i - 1].distance)) rep.distances_decreasing = false;
  }
  return rep;
}

}  // namespace penner
