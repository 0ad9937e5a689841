#pragma once

#include <algorithm>
#include <deque>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "penner/error.hpp"
#include "penner/graph.hpp"
#include "penner/penner.hpp"
#include "penner/poly.hpp"

namespace testing_support {

using penner::IntersectionMatrix;
using penner::OmegaGraph;
using penner::RatMatrix;
using Rng = std::mt19937_64;

inline RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntersectionMatrix omega_of(std::initializer_list<std::initializer_list<long>> rows) {
  return penner::validate_omega(rat_matrix(rows));
}

inline penner::IntPoly int_poly(std::initializer_list<long> low_to_high) {
  std::vector<mpz_class> c;
  for (long v : low_to_high) c.emplace_back(v);
  return penner::IntPoly(std::move(c));
}

inline penner::RatPoly rat_poly(std::initializer_list<long> low_to_high) {
  std::vector<mpq_class> c;
  for (long v : low_to_high) c.emplace_back(v);
  return penner::RatPoly(std::move(c));
}

// Kind of the penner::Error thrown by f, or nullopt.
template <class F>
std::optional<penner::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const penner::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random integral Omega on n vertices whose graph contains a random spanning
// tree, plus extra edges with probability `density`. With `bipartite`,
// vertices are split into two colour classes and only cross edges appear.
inline IntersectionMatrix random_connected_omega(Rng& rng, int n, double density, int max_entry,
                                                 bool bipartite = false) {
  RatMatrix m(n, n);
  std::vector<int> colour(n);
  for (int i = 0; i < n; ++i) colour[i] = i == 0 ? 0 : uniform(rng, 0, 1);
  if (bipartite && n >= 2 && std::all_of(colour.begin(), colour.end(), [](int c) { return c == 0; }))
    colour[n - 1] = 1;
  auto allowed = [&](int i, int j) { return i != j && (!bipartite || colour[i] != colour[j]); };
  auto set = [&](int i, int j) {
    const int w = uniform(rng, 1, max_entry);
    m(i, j) = w;
    m(j, i) = w;
  };
  // Spanning tree: attach each vertex to an earlier allowed one.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  if (bipartite) {
    // Put one vertex of each colour first so every later vertex has a partner.
    auto it = std::find_if(order.begin(), order.end(), [&](int v) { return colour[v] != colour[0]; });
    std::rotate(order.begin() + 1, it, it + 1);
  }
  for (int t = 1; t < n; ++t) {
    std::vector<int> cand;
    for (int s = 0; s < t; ++s)
      if (allowed(order[s], order[t])) cand.push_back(order[s]);
    set(cand[uniform(rng, 0, static_cast<int>(cand.size()) - 1)], order[t]);
  }
  std::bernoulli_distribution extra(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (allowed(i, j) && m(i, j) == 0 && extra(rng)) set(i, j);
  return penner::validate_omega(m);
}

// Random Omega with rational entries (denominators up to max_den); not
// necessarily connected.
inline IntersectionMatrix random_rational_omega(Rng& rng, int n, int max_num, int max_den) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      penner::Rational w(uniform(rng, 0, max_num), uniform(rng, 1, max_den));
      w.canonicalize();
      m(i, j) = w;
      m(j, i) = w;
    }
  return penner::validate_omega(m);
}

inline int random_neighbour(Rng& rng, const OmegaGraph& g, int v) {
  auto nb = g.neighbours(v - 1);
  return static_cast<int>(nb[uniform(rng, 0, static_cast<int>(nb.size()) - 1)]) + 1;
}

// Closed walk v0 v1 ... vm v_{m-1} ... v1 (then back to v0): a random tree
// walk traced out and back, with random spurs (u w u) inserted afterwards.
// Always contractible and supported. Needs an edge at v0.
inline std::vector<int> random_contractible_path(Rng& rng, const OmegaGraph& g, int start, int len) {
  std::vector<int> walk{start};
  for (int t = 0; t < len; ++t) walk.push_back(random_neighbour(rng, g, walk.back()));
  std::vector<int> path = walk;
  for (int t = static_cast<int>(walk.size()) - 2; t >= 1; --t) path.push_back(walk[t]);
  if (path.size() == 1) path.push_back(random_neighbour(rng, g, start));
  const int spurs = uniform(rng, 0, 3);
  for (int s = 0; s < spurs; ++s) {
    const int pos = uniform(rng, 0, static_cast<int>(path.size()) - 1);
    const int u = path[pos];
    const int w = random_neighbour(rng, g, u);
    path.insert(path.begin() + pos + 1, {w, u});
  }
  return path;
}

// Shortest path from a to b (vertices after a, ending with b).
inline std::vector<int> shortest_path(const OmegaGraph& g, int a, int b) {
  const std::size_t n = g.n();
  std::vector<int> prev(n, -1);
  std::deque<int> q{a - 1};
  prev[a - 1] = a - 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (auto w : g.neighbours(v))
      if (prev[w] < 0) {
        prev[w] = v;
        q.push_back(static_cast<int>(w));
      }
  }
  std::vector<int> out;
  for (int v = b - 1; v != a - 1; v = prev[v]) out.push_back(v + 1);
  std::reverse(out.begin(), out.end());
  return out;
}

// Supported closed walk from 1 that visits every vertex of a connected graph.
inline std::vector<int> random_covering_path(Rng& rng, const OmegaGraph& g, int extra_steps = 0) {
  const int n = static_cast<int>(g.n());
  std::vector<int> path{1};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  int unseen = n - 1;
  int extra = extra_steps;
  while (unseen > 0 || extra-- > 0) {
    const int v = random_neighbour(rng, g, path.back());
    path.push_back(v);
    if (!seen[v - 1]) {
      seen[v - 1] = true;
      --unseen;
    }
  }
  if (path.back() == 1) path.pop_back();
  if (path.size() >= 2 && !g.has_edge(path.back() - 1, 0)) {
    auto back = shortest_path(g, path.back(), 1);
    back.pop_back();
    path.insert(path.end(), back.begin(), back.end());
  }
  if (path.size() == 1) path.push_back(random_neighbour(rng, g, 1));
  return path;
}

// Word over 1..n using every index, no equal neighbours (cyclically).
inline std::vector<int> random_general_gamma(Rng& rng, int n, int extra) {
  std::vector<int> gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = i + 1;
  std::shuffle(gamma.begin(), gamma.end(), rng);
  for (int t = 0; t < extra; ++t) {
    const int pos = uniform(rng, 0, static_cast<int>(gamma.size()));
    gamma.insert(gamma.begin() + pos, uniform(rng, 1, n));
  }
  // Drop equal neighbours, including across the wraparound.
  std::vector<int> out;
  for (int v : gamma)
    if (out.empty() || out.back() != v) out.push_back(v);
  while (out.size() >= 2 && out.front() == out.back()) out.pop_back();
  return out;
}

inline std::vector<long> random_powers(Rng& rng, std::size_t k, int max_power) {
  std::vector<long> p(k);
  for (auto& x : p) x = uniform(rng, 1, max_power);
  return p;
}

}  // namespace testing_support
