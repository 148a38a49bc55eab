#pragma once
// Dense all-pairs shortest-path distances (BFS from every vertex) and the
// gated-neighbor sets N(c, x): neighbors of c that begin a geodesic to x.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/graph.hpp"

namespace cops {

class DistanceMatrix {
 public:
  // Sentinel for unreachable pairs. Never used in arithmetic.
  static constexpr int32_t kUnreachable = std::numeric_limits<int32_t>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<size_t>(n) * static_cast<size_t>(n),
                  kUnreachable) {}

  int n() const { return n_; }

  int32_t operator()(Vertex u, Vertex v) const {
    return d_[static_cast<size_t>(u) * static_cast<size_t>(n_) +
              static_cast<size_t>(v)];
  }

  bool reachable(Vertex u, Vertex v) const {
    return (*this)(u, v) != kUnreachable;
  }

  void set(Vertex u, Vertex v, int32_t dist) {
    d_[static_cast<size_t>(u) * static_cast<size_t>(n_) +
       static_cast<size_t>(v)] = dist;
  }

 private:
  int n_ = 0;
  std::vector<int32_t> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.n();
  DistanceMatrix d(n);
  std::vector<Vertex> queue(static_cast<size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    size_t head = 0, tail = 0;
    queue[tail++] = s;
    d.set(s, s, 0);
    while (head < tail) {
      Vertex u = queue[head++];
      int32_t du = d(s, u);
      for (Vertex v : g.neighbors(u))
        if (!d.reachable(s, v)) {
          d.set(s, v, du + 1);
          queue[tail++] = v;
        }
    }
  }
  return d;
}

// Neighbors of c that lie on some shortest c-x path, ascending.
// Requires d(c, x) >= 2; adjacency/equality and disconnection are
// reported as distinct errors.
inline std::vector<Vertex> gated_neighbors(const Graph& g,
                                           const DistanceMatrix& d, Vertex c,
                                           Vertex x) {
  if (c < 0 || c >= g.n() || x < 0 || x >= g.n())
    throw std::invalid_argument("gated_neighbors: vertex out of range");
  if (!d.reachable(c, x))
    throw std::invalid_argument("gated_neighbors: vertices " +
                                std::to_string(c) + " and " +
                                std::to_string(x) + " are disconnected");
  if (d(c, x) < 2)
    throw std::invalid_argument("gated_neighbors: d(" + std::to_string(c) +
                                ", " + std::to_string(x) +
                                ") < 2, gate set is undefined");
  std::vector<Vertex> out;
  const int32_t dcx = d(c, x);
  for (Vertex u : g.neighbors(c))
    if (d.reachable(u, x) && d(u, x) + 1 == dcx) out.push_back(u);
  return out;
}

// The shortest u-v path that greedily takes the smallest-id neighbor
// closer to v at each step. Deterministic; includes both endpoints.
inline std::vector<Vertex> shortest_path_vertices(const Graph& g,
                                                  const DistanceMatrix& d,
                                                  Vertex u, Vertex v) {
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
    throw std::invalid_argument("shortest_path_vertices: vertex out of range");
  if (!d.reachable(u, v))
    throw std::invalid_argument("shortest_path_vertices: vertices " +
                                std::to_string(u) + " and " +
                                std::to_string(v) + " are disconnected");
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (cur != v) {
    const int32_t dcv = d(cur, v);
    for (Vertex w : g.neighbors(cur))
      if (d.reachable(w, v) && d(w, v) + 1 == dcv) {
        cur = w;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

}  // namespace cops
