#include "penner/graph.hpp"

#include <algorithm>
#include <deque>

#include "penner/error.hpp"

namespace penner {

void OmegaGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) return;
  adj_[i * n_ + j] = adj_[j * n_ + i] = true;
}

std::vector<std::size_t> OmegaGraph::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (has_edge(i, j)) out.push_back(j);
  return out;
}

std::vector<std::pair<int, int>> OmegaGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
  return out;
}

OmegaGraph graph_of(const IntersectionMatrix& omega) {
  OmegaGraph g(omega.n());
  for (std::size_t i = 0; i < omega.n(); ++i)
    for (std::size_t j = i + 1; j < omega.n(); ++j)
      if (omega(i, j) > 0) g.add_edge(i, j);
  return g;
}

bool is_connected(const OmegaGraph& g) {
  if (g.n() == 0) return true;
  std::vector<bool> seen(g.n(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbours(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
  }
  return count == g.n();
}

std::optional<Bipartition> bipartition(const OmegaGraph& g) {
  std::vector<int> colour(g.n(), -1);
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbours(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (std::size_t v = 0; v < g.n(); ++v) (colour[v] == 0 ? b.a_block : b.b_block).push_back(static_cast<int>(v + 1));
  return b;
}

bool is_bipartite(const OmegaGraph& g) { return bipartition(g).has_value(); }

bool word_supported(const std::vector<int>& gamma, const OmegaGraph& g) {
  const std::size_t k = gamma.size();
  for (int v : gamma)
    if (v < 1 || static_cast<std::size_t>(v) > g.n()) return false;
  if (k < 2) return false;
  for (std::size_t t = 0; t < k; ++t)
    if (!g.has_edge(gamma[t] - 1, gamma[(t + 1) % k] - 1)) return false;
  return true;
}

bool word_supported(const TwistWord& word, const OmegaGraph& g) { return word_supported(word.gamma(), g); }

bool is_general(const std::vector<int>& gamma, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (int v : gamma)
    if (v >= 1 && static_cast<std::size_t>(v) <= n) seen[v - 1] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_general(const TwistWord& word, std::size_t n) { return is_general(word.gamma(), n); }

namespace {

// Free reduction of the based walk v_0 ... v_m (open); stack-based, so the
// result has no backtracking.
std::vector<int> reduce_open(const std::vector<int>& walk) {
  std::vector<int> st;
  for (int v : walk) {
    if (st.size() >= 2 && st[st.size() - 2] == v)
      st.pop_back();
    else
      st.push_back(v);
  }
  return st;
}

}  // namespace

std::vector<int> reduce_backtracking(const std::vector<int>& gamma, bool rel_last_edge) {
  if (gamma.size() < 2) return gamma;
  if (rel_last_edge) {
    // The closing edge (v_{K-1}, v_0) is frozen, so only the open prefix reduces.
    return reduce_open(gamma);
  }
  std::vector<int> walk = gamma;
  walk.push_back(gamma.front());
  std::vector<int> st = reduce_open(walk);
  // st is a reduced based loop st[0] ... st[m] with st[m] == st[0]; cancel
  // first and last edges cyclically.
  std::size_t lo = 0, hi = st.size() - 1;
  while (hi - lo >= 2 && st[lo + 1] == st[hi - 1]) {
    ++lo;
    --hi;
  }
  if (hi == lo) return {st[lo]};
  return std::vector<int>(st.begin() + lo, st.begin() + hi);
}

bool is_contractible(const std::vector<int>& gamma) { return reduce_backtracking(gamma, false).size() <= 1; }

std::vector<int> spanning_tree_tour(const OmegaGraph& g, int root) {
  if (root < 1 || static_cast<std::size_t>(root) > g.n())
    throw Error(ErrorKind::IndexOutOfRange, "root " + std::to_string(root));
  std::vector<bool> seen(g.n(), false);
  std::vector<int> tour;
  // Iterative DFS emitting the vertex on entry and again after each child.
  struct Frame {
    std::size_t v, next;
  };
  std::vector<Frame> stack{{static_cast<std::size_t>(root - 1), 0}};
  seen[root - 1] = true;
  tour.push_back(root);
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool descended = false;
    while (f.next < g.n()) {
      std::size_t w = f.next++;
      if (g.has_edge(f.v, w) && !seen[w]) {
        seen[w] = true;
        tour.push_back(static_cast<int>(w + 1));
        stack.push_back({w, 0});
        descended = true;
        break;
      }
    }
    if (descended) continue;
    stack.pop_back();
    if (!stack.empty()) tour.push_back(static_cast<int>(stack.back().v + 1));
  }
  // The walk ends back at the root; drop the repeated endpoint.
  if (tour.size() > 1) tour.pop_back();
  return tour;
}

}  // namespace penner
