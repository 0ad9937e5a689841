#include "penner/modular.hpp"

#include <algorithm>

namespace penner::modp {

namespace {

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

PolyP make_monic(PolyP a, u64 p) {
  if (a.empty()) return a;
  u64 li = inv(a.back(), p);
  for (auto& c : a) c = c * li % p;
  return a;
}

PolyP powmod(const PolyP& a, u64 e, const PolyP& f, u64 p) {
  PolyP result{1}, base = rem(a, f, p);
  result = rem(result, f, p);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, base, p), f, p);
    e >>= 1;
    if (e) base = rem(mul(base, base, p), f, p);
  }
  return result;
}

}  // namespace

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) { return powm(a, p - 2, p); }

std::vector<u64> primes_from(u64 start, std::size_t count) {
  std::vector<u64> out;
  mpz_class z(static_cast<unsigned long>(start - 1));
  while (out.size() < count) {
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    out.push_back(z.get_ui());
  }
  return out;
}

PolyP reduce(const IntPoly& f, u64 p) {
  PolyP out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mpz_fdiv_ui(f[static_cast<int>(i)].get_mpz_t(), p);
  trim(out);
  return out;
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

PolyP rem(PolyP a, const PolyP& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const u64 li = inv(b.back(), p);
  while (a.size() >= b.size()) {
    u64 f = a.back() * li % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], f * b[j] % p, p);
    trim(a);
  }
  return a;
}

PolyP quo(PolyP a, const PolyP& b, u64 p) {
  trim(a);
  if (a.size() < b.size()) return {};
  const std::size_t db = b.size() - 1;
  const u64 li = inv(b.back(), p);
  PolyP q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    u64 f = a[i] * li % p;
    q[i - db] = f;
    if (!f) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], f * b[j] % p, p);
  }
  trim(q);
  return q;
}

PolyP gcd(PolyP a, PolyP b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

PolyP derivative(const PolyP& a, u64 p) {
  if (a.size() <= 1) return {};
  PolyP d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  trim(d);
  return d;
}

bool is_squarefree(const PolyP& f, u64 p) {
  PolyP d = derivative(f, p);
  if (d.empty()) return f.size() <= 1;
  return gcd(f, d, p).size() == 1;
}

std::vector<int> factor_degrees(const PolyP& f_in, u64 p) {
  std::vector<int> degs;
  PolyP f = make_monic(f_in, p);
  PolyP h{0, 1};  // x^(p^d) mod f
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = powmod(h, p, f, p);
    PolyP hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = sub(hx[1], 1, p);
    trim(hx);
    PolyP g = gcd(f, hx, p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int t = 0; t < dg / d; ++t) degs.push_back(d);
      f = quo(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
  std::sort(degs.begin(), degs.end());
  return degs;
}

PolyP charpoly(const IntMatrix& a, u64 p) {
  const std::size_t n = a.rows();
  std::vector<u64> h(n * n);
  auto H = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H(i, j) = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);

  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t r = c + 1;
    std::size_t piv = r;
    while (piv < n && H(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(r, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, r));
    }
    const u64 pinv = inv(H(r, c), p);
    for (std::size_t k = r + 1; k < n; ++k) {
      if (H(k, c) == 0) continue;
      const u64 u = H(k, c) * pinv % p;
      for (std::size_t j = 0; j < n; ++j) H(k, j) = sub(H(k, j), u * H(r, j) % p, p);
      for (std::size_t i = 0; i < n; ++i) H(i, r) = (H(i, r) + u * H(i, k)) % p;
    }
  }

  // p_m = (x - h_{m-1,m-1}) p_{m-1} - sum_i t_i h_{m-1-i,m-1} p_{m-1-i}
  std::vector<PolyP> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    PolyP cur(m + 1, 0);
    const PolyP& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = sub(cur[d], H(m - 1, m - 1) * prev[d] % p, p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * H(m - i, m - i - 1) % p;
      if (t == 0) break;
      const u64 coef = t * H(m - 1 - i, m - 1) % p;
      if (!coef) continue;
      const PolyP& q = polys[m - 1 - i];
      for (std::size_t d = 0; d < q.size(); ++d) cur[d] = sub(cur[d], coef * q[d] % p, p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

}  // namespace penner::modp
