#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "penner/penner.hpp"

namespace penner {

// G(Omega): vertex i ~ j iff omega_ij > 0. Vertices are 0-based internally.
class OmegaGraph {
 public:
  explicit OmegaGraph(std::size_t n = 0) : n_(n), adj_(n * n, false) {}

  std::size_t n() const { return n_; }
  bool has_edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j]; }
  void add_edge(std::size_t i, std::size_t j);
  std::vector<std::size_t> neighbours(std::size_t i) const;
  // Edges as 1-based pairs (i < j).
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const OmegaGraph& a, const OmegaGraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t n_;
  std::vector<bool> adj_;
};

struct Bipartition {
  std::vector<int> a_block, b_block;  // 1-based, ascending
};

OmegaGraph graph_of(const IntersectionMatrix& omega);
bool is_connected(const OmegaGraph& g);
// Two-colouring; vertex 1 always lands in the a-block.
std::optional<Bipartition> bipartition(const OmegaGraph& g);
bool is_bipartite(const OmegaGraph& g);

bool word_supported(const std::vector<int>& gamma, const OmegaGraph& g);
bool word_supported(const TwistWord& word, const OmegaGraph& g);
bool is_general(const std::vector<int>& gamma, std::size_t n);
bool is_general(const TwistWord& word, std::size_t n);

// Removes backtrackings (i j i) until none remain. With rel_last_edge the
// closing edge (i_K, i_1) is kept; otherwise cancellation also runs across
// the wraparound and the base point may move. A fully cancelled loop is
// returned as its single base vertex.
std::vector<int> reduce_backtracking(const std::vector<int>& gamma, bool rel_last_edge);
bool is_contractible(const std::vector<int>& gamma);

// Closed walk from `root` along a depth-first spanning tree that traverses
// every tree edge twice; contractible and visits every vertex of the
// component of `root`. 1-based.
std::vector<int> spanning_tree_tour(const OmegaGraph& g, int root = 1);

}  // namespace penner
