#pragma once
// Structural decompositions: closed twin classes, biconnected blocks with
// cut vertices, and the dismantling order test.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cops/graph.hpp"

namespace cops {

// Partition of V into classes of mutually closed-twin vertices
// (N[u] == N[v]). Classes are sorted internally and ordered by their
// smallest member. Distinct closed twins are necessarily adjacent.
inline std::vector<std::vector<Vertex>> closed_twin_classes(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> cls(static_cast<size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (cls[static_cast<size_t>(v)] >= 0) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({v});
    cls[static_cast<size_t>(v)] = id;
    for (Vertex u = v + 1; u < n; ++u)
      if (cls[static_cast<size_t>(u)] < 0 && g.dominates(v, u) &&
          g.dominates(u, v)) {
        classes[static_cast<size_t>(id)].push_back(u);
        cls[static_cast<size_t>(u)] = id;
      }
  }
  return classes;
}

struct BlockDecomposition {
  // Vertex sets of the biconnected components, each sorted; ordered by
  // discovery. A bridge forms a 2-vertex block. Isolated vertices give a
  // singleton block.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;  // ascending
};

// Iterative Hopcroft-Tarjan lowpoint computation.
inline BlockDecomposition blocks(const Graph& g) {
  const int n = g.n();
  BlockDecomposition out;
  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<char> is_cut(static_cast<size_t>(n), 0);
  std::vector<Edge> estack;
  int timer = 0;

  struct Frame {
    Vertex u;
    size_t next_edge;
  };

  auto pop_block = [&](Vertex u, Vertex v) {
    std::vector<Vertex> verts;
    Edge top;
    do {
      top = estack.back();
      estack.pop_back();
      verts.push_back(top.first);
      verts.push_back(top.second);
    } while (top != Edge(u, v));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.blocks.push_back(std::move(verts));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[static_cast<size_t>(root)] = timer++;
      out.blocks.push_back({root});
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{root, 0}};
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      Vertex u = f.u;
      const auto& nbrs = g.neighbors(u);
      if (f.next_edge < nbrs.size()) {
        Vertex v = nbrs[f.next_edge++];
        if (disc[static_cast<size_t>(v)] < 0) {
          parent[static_cast<size_t>(v)] = u;
          estack.emplace_back(u, v);
          disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] =
              timer++;
          stack.push_back({v, 0});
        } else if (v != parent[static_cast<size_t>(u)] &&
                   disc[static_cast<size_t>(v)] <
                       disc[static_cast<size_t>(u)]) {
          estack.emplace_back(u, v);
          low[static_cast<size_t>(u)] =
              std::min(low[static_cast<size_t>(u)],
                       disc[static_cast<size_t>(v)]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        Vertex p = stack.back().u;
        low[static_cast<size_t>(p)] =
            std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
        if (low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)]) {
          if (p == root)
            ++root_children;
          else
            is_cut[static_cast<size_t>(p)] = 1;
          pop_block(p, u);
        }
      }
    }
    if (root_children > 1) is_cut[static_cast<size_t>(root)] = 1;
  }

  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<size_t>(v)]) out.cut_vertices.push_back(v);
  return out;
}

struct DismantleResult {
  bool dismantlable = false;
  // Removal order; when dismantlable it lists all n vertices, the last one
  // being the survivor. Otherwise it holds the removals made before the
  // process stalled.
  std::vector<Vertex> order;
};

// Repeatedly deletes the lowest-id dominated vertex (some other vertex v
// has N[u] within N[v] in the current residual graph). A connected graph
// is cop-win for one cop exactly when this reaches a single vertex.
inline DismantleResult is_dismantlable(const Graph& g) {
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("is_dismantlable: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("is_dismantlable: graph must be connected");
  // Residual closed neighborhoods as bitmask rows.
  const size_t words = g.mask_words();
  std::vector<uint64_t> mask(static_cast<size_t>(n) * words);
  for (Vertex v = 0; v < n; ++v)
    std::copy(g.closed_nbhd_mask(v), g.closed_nbhd_mask(v) + words,
              mask.begin() + static_cast<size_t>(v) * words);
  std::vector<char> alive(static_cast<size_t>(n), 1);

  DismantleResult res;
  int remaining = n;
  while (remaining > 1) {
    Vertex removed = -1;
    for (Vertex u = 0; u < n && removed < 0; ++u) {
      if (!alive[static_cast<size_t>(u)]) continue;
      const uint64_t* mu = mask.data() + static_cast<size_t>(u) * words;
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || !alive[static_cast<size_t>(v)]) continue;
        const uint64_t* mv = mask.data() + static_cast<size_t>(v) * words;
        bool dominated = true;
        for (size_t w = 0; w < words && dominated; ++w)
          if (mu[w] & ~mv[w]) dominated = false;
        if (dominated) {
          removed = u;
          break;
        }
      }
    }
    if (removed < 0) return res;  // stalled, not dismantlable
    alive[static_cast<size_t>(removed)] = 0;
    res.order.push_back(removed);
    --remaining;
    // Erase the removed vertex from every residual closed neighborhood.
    const size_t word = static_cast<size_t>(removed) / 64;
    const uint64_t bit = uint64_t{1} << (static_cast<size_t>(removed) % 64);
    for (Vertex v = 0; v < n; ++v)
      if (alive[static_cast<size_t>(v)])
        mask[static_cast<size_t>(v) * words + word] &= ~bit;
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[static_cast<size_t>(v)]) res.order.push_back(v);
  res.dismantlable = true;
  return res;
}

}  // namespace cops
