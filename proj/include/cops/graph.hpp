#pragma once
// Undirected simple graphs on vertices 0..n-1 with adjacency lists and
// closed-neighborhood bitmasks. The masks make domination tests
// (N[u] superset of N[v]) a few word operations, which the metric
// characterizations rely on heavily.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cops {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    init_masks();
  }

  int n() const { return n_; }
  int m() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v, "neighbors");
    return adj_[static_cast<size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    if (u == v) return false;
    return (mask_word(u, v) >> bit_index(v)) & 1u;
  }

  // Closed neighborhood membership: v == u or v adjacent to u.
  bool in_closed_nbhd(Vertex u, Vertex v) const {
    check_vertex(u, "in_closed_nbhd");
    check_vertex(v, "in_closed_nbhd");
    return (mask_word(u, v) >> bit_index(v)) & 1u || u == v;
  }

  // True iff N[u] is a superset of N[v].
  bool dominates(Vertex u, Vertex v) const {
    check_vertex(u, "dominates");
    check_vertex(v, "dominates");
    const uint64_t* mu = mask_row(u);
    const uint64_t* mv = mask_row(v);
    for (size_t w = 0; w < words_; ++w)
      if (mv[w] & ~mu[w]) return false;
    return true;
  }

  const uint64_t* closed_nbhd_mask(Vertex v) const {
    check_vertex(v, "closed_nbhd_mask");
    return mask_row(v);
  }
  size_t mask_words() const { return words_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[static_cast<size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v)
      throw std::invalid_argument("add_edge: self-loop at vertex " +
                                  std::to_string(u));
    if (has_edge(u, v))
      throw std::invalid_argument("add_edge: duplicate edge (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    adj_[static_cast<size_t>(u)].insert(
        std::lower_bound(adj_[static_cast<size_t>(u)].begin(),
                         adj_[static_cast<size_t>(u)].end(), v),
        v);
    adj_[static_cast<size_t>(v)].insert(
        std::lower_bound(adj_[static_cast<size_t>(v)].begin(),
                         adj_[static_cast<size_t>(v)].end(), u),
        u);
    set_mask_bit(u, v);
    set_mask_bit(v, u);
    ++m_;
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  void init_masks() {
    words_ = static_cast<size_t>((n_ + 63) / 64);
    if (words_ == 0) words_ = 1;
    masks_.assign(static_cast<size_t>(n_) * words_, 0);
    for (Vertex v = 0; v < n_; ++v) set_mask_bit(v, v);
  }

  void set_mask_bit(Vertex row, Vertex v) {
    masks_[static_cast<size_t>(row) * words_ + static_cast<size_t>(v) / 64] |=
        uint64_t{1} << (static_cast<size_t>(v) % 64);
  }

  const uint64_t* mask_row(Vertex v) const {
    return masks_.data() + static_cast<size_t>(v) * words_;
  }
  uint64_t mask_word(Vertex row, Vertex v) const {
    return masks_[static_cast<size_t>(row) * words_ +
                  static_cast<size_t>(v) / 64];
  }
  static size_t bit_index(Vertex v) { return static_cast<size_t>(v) % 64; }

  void check_vertex(Vertex v, const char* who) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument(std::string(who) + ": vertex " +
                                  std::to_string(v) + " out of range [0, " +
                                  std::to_string(n_) + ")");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<uint64_t> masks_;
  size_t words_ = 1;
};

// Validates and assembles a graph from an edge list. Rejects out-of-range
// endpoints, self-loops and duplicate edges, naming the offending pair.
inline Graph build_graph(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("build_graph: edge (" + std::to_string(u) +
                                  ", " + std::to_string(v) +
                                  ") out of range [0, " + std::to_string(n) +
                                  ")");
    g.add_edge(u, v);
  }
  return g;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u))
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n();
}

}  // namespace cops
