#pragma once
// Induced subgraph views over a parent graph, plus the isometry test
// (induced distances agree with parent distances on every vertex pair).

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/distance.hpp"
#include "cops/graph.hpp"

namespace cops {

class SubgraphView {
 public:
  SubgraphView() = default;

  SubgraphView(const Graph& parent, std::vector<Vertex> vertices)
      : parent_(&parent), verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
      throw std::invalid_argument("SubgraphView: duplicate vertex in subset");
    if (verts_.empty())
      throw std::invalid_argument("SubgraphView: empty vertex subset");
    if (verts_.front() < 0 || verts_.back() >= parent.n())
      throw std::invalid_argument("SubgraphView: vertex out of range");
    pos_.assign(static_cast<size_t>(parent.n()), -1);
    for (size_t i = 0; i < verts_.size(); ++i)
      pos_[static_cast<size_t>(verts_[i])] = static_cast<int>(i);
  }

  const Graph& parent() const { return *parent_; }
  const std::vector<Vertex>& vertices() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }

  bool contains(Vertex v) const {
    return v >= 0 && v < parent_->n() && pos_[static_cast<size_t>(v)] >= 0;
  }

  // Position of v inside vertices(), or -1.
  int index_of(Vertex v) const {
    return contains(v) ? pos_[static_cast<size_t>(v)] : -1;
  }

  // Standalone copy of the induced subgraph; vertex i corresponds to
  // vertices()[i].
  Graph induced_graph() const {
    Graph h(size());
    for (int i = 0; i < size(); ++i)
      for (Vertex w : parent_->neighbors(verts_[static_cast<size_t>(i)])) {
        int j = index_of(w);
        if (j > i) h.add_edge(i, j);
      }
    return h;
  }

 private:
  const Graph* parent_ = nullptr;
  std::vector<Vertex> verts_;
  std::vector<int> pos_;
};

struct IsometryReport {
  bool isometric = false;
  // First violating pair in parent ids (lexicographic), with both distances.
  // A disconnected induced subgraph reports dist_sub == kUnreachable.
  Vertex u = -1;
  Vertex v = -1;
  int32_t dist_sub = 0;
  int32_t dist_parent = 0;
};

// Checks d_H(u, v) == d_G(u, v) for all u, v in H, where d_H is measured
// inside the induced subgraph. Induced distances can never be smaller, so
// any violation has dist_sub > dist_parent or an unreachable pair.
inline IsometryReport is_isometric(const Graph& g, const DistanceMatrix& d,
                                   const SubgraphView& h) {
  const auto& vs = h.vertices();
  const int k = h.size();
  // BFS inside the induced subgraph from each vertex, in parent ids.
  std::vector<int32_t> dist(static_cast<size_t>(k));
  std::vector<Vertex> queue(static_cast<size_t>(k));
  for (int si = 0; si < k; ++si) {
    std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
    size_t head = 0, tail = 0;
    dist[static_cast<size_t>(si)] = 0;
    queue[tail++] = vs[static_cast<size_t>(si)];
    while (head < tail) {
      Vertex u = queue[head++];
      int32_t du = dist[static_cast<size_t>(h.index_of(u))];
      for (Vertex w : g.neighbors(u)) {
        int wi = h.index_of(w);
        if (wi >= 0 && dist[static_cast<size_t>(wi)] ==
                           DistanceMatrix::kUnreachable) {
          dist[static_cast<size_t>(wi)] = du + 1;
          queue[tail++] = w;
        }
      }
    }
    for (int ti = 0; ti < k; ++ti) {
      int32_t dh = dist[static_cast<size_t>(ti)];
      int32_t dg = d(vs[static_cast<size_t>(si)], vs[static_cast<size_t>(ti)]);
      if (dh != dg)
        return {false, vs[static_cast<size_t>(si)], vs[static_cast<size_t>(ti)],
                dh, dg};
    }
  }
  return {true, -1, -1, 0, 0};
}

}  // namespace cops
