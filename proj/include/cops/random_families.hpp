#pragma once
// Seeded random instance generators. All randomness flows from an explicit
// 64-bit seed through a splitmix64 engine so instances are reproducible
// across platforms and standard library versions (std::uniform_int_
// distribution is implementation-defined, so it is avoided on purpose).
// Every generator verifies its own postcondition before returning.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/backbone.hpp"
#include "cops/characterize.hpp"
#include "cops/distance.hpp"
#include "cops/families.hpp"
#include "cops/graph.hpp"
#include "cops/subgraph.hpp"

namespace cops {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); modulo bias removed by rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  // True with probability num/den.
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

 private:
  uint64_t state_;
};

// Connected graph whose blocks are all cliques: grown by repeatedly gluing
// a random clique (size 2..max_clique, capped by the remaining budget) to
// a random existing vertex.
inline Graph random_block_graph(uint64_t seed, int vertex_budget,
                                int max_clique = 4) {
  if (vertex_budget < 1)
    throw std::invalid_argument("random_block_graph: vertex_budget >= 1");
  if (max_clique < 2)
    throw std::invalid_argument("random_block_graph: max_clique >= 2");
  Rng rng(seed);
  int n = 1;
  std::vector<Edge> edges;
  while (n < vertex_budget) {
    Vertex attach = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
    int s = 2 + rng.below_int(max_clique - 1);
    if (s - 1 > vertex_budget - n) s = vertex_budget - n + 1;
    std::vector<Vertex> clique{attach};
    for (int i = 0; i < s - 1; ++i) clique.push_back(n + i);
    n += s - 1;
    for (size_t a = 0; a < clique.size(); ++a)
      for (size_t b = a + 1; b < clique.size(); ++b)
        edges.emplace_back(clique[a], clique[b]);
  }
  Graph g = build_graph(n, edges);
  if (auto viol = is_block_graph(g))
    throw std::logic_error("random_block_graph: postcondition failed: " +
                           viol->detail);
  return g;
}

namespace detail {

// Appends `count` extra vertices to g, each adjacent to a nonempty set
// S with anchor a drawn from anchor_pool, a in S, S within N[a] of the
// graph passed in. Extras never attach to each other, and every pair in
// S lies within distance 2 through a, so the original vertex set stays
// isometric in the result.
inline Graph attach_anchored_extras(const Graph& g, Rng& rng, int count,
                                    const std::vector<Vertex>& anchor_pool) {
  if (anchor_pool.empty())
    throw std::invalid_argument("attach_anchored_extras: empty anchor pool");
  const int base_n = g.n();
  std::vector<Edge> edges = g.edges();
  for (int e = 0; e < count; ++e) {
    Vertex w = base_n + e;
    Vertex a = anchor_pool[rng.below(anchor_pool.size())];
    edges.emplace_back(w, a);
    for (Vertex u : g.neighbors(a))
      if (rng.chance(1, 3)) edges.emplace_back(w, u);
  }
  return build_graph(base_n + count, edges);
}

}  // namespace detail

struct RandomVertebrateParams {
  int base_budget = 6;    // vertices of the underlying block graph
  int max_clique = 4;     // block graph growth parameter
  int max_blow = 3;       // cut vertices blow up to size 1..max_blow
  int extra_vertices = 3; // vertices outside the backbone
  int max_retries = 64;
};

struct RandomVertebrate {
  Graph graph;
  std::vector<Vertex> backbone;  // verified before returning
};

// Vertebrate instance: a block graph, cut vertices blown into cliques
// (yielding an extended block graph B), then extra vertices anchored into
// closed neighborhoods of joints. The declared backbone is V(B); every
// instance is verified with verify_backbone, retrying with a derived seed
// on failure.
inline RandomVertebrate random_vertebrate_graph(
    uint64_t seed, const RandomVertebrateParams& params = {}) {
  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    Rng rng(seed + 0x632be59bd9b4e019ULL * static_cast<uint64_t>(attempt));
    Graph base =
        random_block_graph(rng.next_u64(), params.base_budget, params.max_clique);
    BlowupSpec spec;
    spec.base = base;
    BlockDecomposition bd = blocks(base);
    for (Vertex c : bd.cut_vertices)
      spec.sizes[c] = 1 + rng.below_int(params.max_blow);
    BlowupResult blown = blow_up(spec);
    const Graph& b = blown.graph;

    // Anchor extras at joints when the blow-up created any, else anywhere
    // in B; either way S stays inside one closed neighborhood.
    ExtendedBlockResult ebr = is_extended_block_graph(b);
    std::vector<Vertex> pool = ebr.joints.joints;
    if (pool.empty())
      for (Vertex v = 0; v < b.n(); ++v) pool.push_back(v);

    Graph g = detail::attach_anchored_extras(b, rng, params.extra_vertices, pool);
    std::vector<Vertex> backbone;
    for (Vertex v = 0; v < b.n(); ++v) backbone.push_back(v);

    DistanceMatrix d = all_pairs_distances(g);
    BackboneCheck chk = verify_backbone(g, d, backbone);
    if (chk.ok) return RandomVertebrate{std::move(g), std::move(backbone)};
  }
  throw std::runtime_error(
      "random_vertebrate_graph: retries exhausted, parameters too tight "
      "(seed " + std::to_string(seed) + ")");
}

// Host extension: plants h isometrically as the id-prefix of a larger
// graph by anchoring extra vertices into closed neighborhoods of h.
// Verified with is_isometric before returning.
inline Graph random_host(uint64_t seed, const Graph& h, int extra_vertices) {
  Rng rng(seed);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < h.n(); ++v) pool.push_back(v);
  Graph g = detail::attach_anchored_extras(h, rng, extra_vertices, pool);
  std::vector<Vertex> hv(pool.begin(), pool.end());
  DistanceMatrix d = all_pairs_distances(g);
  SubgraphView view(g, hv);
  IsometryReport rep = is_isometric(g, d, view);
  if (!rep.isometric)
    throw std::logic_error("random_host: postcondition failed at pair (" +
                           std::to_string(rep.u) + ", " + std::to_string(rep.v) +
                           ")");
  return g;
}

// Random connected graph: each pair joined with probability num/den,
// resampled until connected (budgeted). Used as a host pool for guarding
// shortest paths.
inline Graph random_connected_graph(uint64_t seed, int n, uint64_t num = 1,
                                    uint64_t den = 3, int max_retries = 256) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n >= 1");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(attempt));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.chance(num, den)) edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error(
      "random_connected_graph: retries exhausted (edge probability too low)");
}

}  // namespace cops
