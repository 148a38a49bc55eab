#pragma once
// Deterministic graph family constructors: paths, cycles, cliques, the
// generalized Petersen graphs GP(n, k), their multi-layer extension
// MGP(n, k, t), cut-vertex blow-ups of block graphs, and the fixed
// seven-vertex instance whose subgraph is cop-win yet not 1-guardable.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cops/characterize.hpp"
#include "cops/graph.hpp"
#include "cops/io.hpp"
#include "cops/subgraph.hpp"

namespace cops {

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Vertex id scheme for MGP(n, k, t): column i on layer j has id j*n + i.
// Layer 0 carries the n-cycle, layers 1..t carry skip-k edges, and each
// column induces a K_{t+1}.
struct MgpLabeling {
  int n = 0;
  int k = 0;
  int t = 0;

  // Reduces an arbitrary (possibly negative) column index modulo n.
  int wrap(int i) const {
    int r = i % n;
    return r < 0 ? r + n : r;
  }

  Vertex to_id(int j, int i) const {
    if (j < 0 || j > t)
      throw std::invalid_argument("MgpLabeling::to_id: layer out of range");
    return j * n + wrap(i);
  }

  int layer_of(Vertex v) const { return v / n; }
  int index_of(Vertex v) const { return v % n; }

  std::vector<LayerCoord> coords() const {
    std::vector<LayerCoord> out;
    out.reserve(static_cast<size_t>(n) * static_cast<size_t>(t + 1));
    for (int j = 0; j <= t; ++j)
      for (int i = 0; i < n; ++i) out.push_back(LayerCoord{j, i});
    return out;
  }
};

struct MgpInstance {
  Graph graph;
  MgpLabeling labeling;
};

// Multi-layer generalized Petersen graph on n(t+1) vertices. Rejects
// parameter sets that would create self-loops or duplicate edges rather
// than silently deduplicating: skip edges {i, i+k} and {i+k, i+2k} coincide
// exactly when 2k = 0 (mod n).
inline MgpInstance gen_mgp(int n, int k, int t) {
  if (n < 3) throw std::invalid_argument("gen_mgp: need n >= 3, got n = " +
                                         std::to_string(n));
  if (t < 1) throw std::invalid_argument("gen_mgp: need t >= 1, got t = " +
                                         std::to_string(t));
  if (k < 1 || k >= n)
    throw std::invalid_argument("gen_mgp: need 1 <= k < n, got k = " +
                                std::to_string(k) + ", n = " +
                                std::to_string(n));
  if ((2 * k) % n == 0)
    throw std::invalid_argument(
        "gen_mgp: 2k = 0 (mod n) duplicates skip edges (k = " +
        std::to_string(k) + ", n = " + std::to_string(n) + ")");

  MgpInstance out;
  out.labeling = MgpLabeling{n, k, t};
  const MgpLabeling& lab = out.labeling;
  Graph g(n * (t + 1));
  for (int i = 0; i < n; ++i) g.add_edge(lab.to_id(0, i), lab.to_id(0, i + 1));
  // The 2k != 0 (mod n) guard above makes every skip pair distinct, so a
  // duplicate here would be a construction bug; add_edge throws on it.
  for (int j = 1; j <= t; ++j)
    for (int i = 0; i < n; ++i) g.add_edge(lab.to_id(j, i), lab.to_id(j, i + k));
  for (int i = 0; i < n; ++i)
    for (int j1 = 0; j1 <= t; ++j1)
      for (int j2 = j1 + 1; j2 <= t; ++j2)
        g.add_edge(lab.to_id(j1, i), lab.to_id(j2, i));
  out.graph = std::move(g);
  return out;
}

// Classic generalized Petersen graph: the t = 1 case with outer vertices
// a_i = i and inner vertices b_i = n + i.
inline MgpInstance gen_gp(int n, int k) { return gen_mgp(n, k, 1); }

struct BlowupSpec {
  Graph base;
  // Cut vertex of base -> clique size (>= 1). Unlisted vertices keep a
  // single copy. Listing a non-cut vertex is rejected.
  std::map<Vertex, int> sizes;
};

struct BlowupResult {
  Graph graph;
  // copies[v] = ids of the copies of base vertex v, ascending; contiguous
  // blocks assigned in base vertex order.
  std::vector<std::vector<Vertex>> copies;
};

// Replaces each listed cut vertex of a block graph by a clique, every
// member inheriting the full base neighborhood. The copies of one vertex
// are mutual closed twins in the output, and the output is an extended
// block graph.
inline BlowupResult blow_up(const BlowupSpec& spec) {
  const Graph& base = spec.base;
  if (!is_connected(base))
    throw std::invalid_argument("blow_up: base graph must be connected");
  if (auto viol = is_block_graph(base))
    throw std::invalid_argument("blow_up: base is not a block graph: " +
                                viol->detail);
  BlockDecomposition bd = blocks(base);
  std::vector<char> is_cut(static_cast<size_t>(base.n()), 0);
  for (Vertex c : bd.cut_vertices) is_cut[static_cast<size_t>(c)] = 1;

  std::vector<int> size(static_cast<size_t>(base.n()), 1);
  for (const auto& [v, s] : spec.sizes) {
    if (v < 0 || v >= base.n())
      throw std::invalid_argument("blow_up: vertex " + std::to_string(v) +
                                  " out of range");
    if (!is_cut[static_cast<size_t>(v)])
      throw std::invalid_argument("blow_up: vertex " + std::to_string(v) +
                                  " is not a cut vertex of the base");
    if (s < 1)
      throw std::invalid_argument("blow_up: size for vertex " +
                                  std::to_string(v) + " must be >= 1");
    size[static_cast<size_t>(v)] = s;
  }

  BlowupResult out;
  out.copies.resize(static_cast<size_t>(base.n()));
  int total = 0;
  for (Vertex v = 0; v < base.n(); ++v) {
    for (int i = 0; i < size[static_cast<size_t>(v)]; ++i)
      out.copies[static_cast<size_t>(v)].push_back(total + i);
    total += size[static_cast<size_t>(v)];
  }
  Graph g(total);
  for (const auto& [u, v] : base.edges())
    for (Vertex cu : out.copies[static_cast<size_t>(u)])
      for (Vertex cv : out.copies[static_cast<size_t>(v)]) g.add_edge(cu, cv);
  for (Vertex v = 0; v < base.n(); ++v) {
    const auto& cs = out.copies[static_cast<size_t>(v)];
    for (size_t a = 0; a < cs.size(); ++a)
      for (size_t b = a + 1; b < cs.size(); ++b) g.add_edge(cs[a], cs[b]);
  }
  out.graph = std::move(g);
  return out;
}

struct Figure1 {
  Graph g;
  std::vector<Vertex> h_vertices;
  SubgraphView h() const { return SubgraphView(g, h_vertices); }
};

// Seven-vertex instance: H = G[{0..5}] is dismantlable and isometric in G,
// yet a single cop cannot guard it; the escape hatch is vertex 6, adjacent
// to 2, 4 and 5. Adjacency frozen from the source drawing.
inline Figure1 figure1_instance() {
  Figure1 out;
  Graph g(7);
  const std::pair<Vertex, Vertex> h_edges[] = {{0, 1}, {0, 2}, {0, 3},
                                               {0, 4}, {1, 2}, {1, 3},
                                               {1, 5}, {3, 4}, {3, 5}};
  for (auto [u, v] : h_edges) g.add_edge(u, v);
  g.add_edge(2, 6);
  g.add_edge(4, 6);
  g.add_edge(5, 6);
  out.g = std::move(g);
  out.h_vertices = {0, 1, 2, 3, 4, 5};
  return out;
}

}  // namespace cops
