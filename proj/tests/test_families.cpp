#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cops/characterize.hpp"
#include "cops/distance.hpp"
#include "cops/families.hpp"
#include "cops/graph.hpp"
#include "cops/random_families.hpp"
#include "cops/structure.hpp"
#include "cops/subgraph.hpp"

using cops::Graph;
using cops::Vertex;

namespace {

// Contract each vertex class to its class index, deduplicating edges.
// Independent of the blow_up construction; used to invert it.
Graph contract_classes(const Graph& g,
                       const std::vector<std::vector<Vertex>>& classes) {
  std::vector<int> cls(g.n(), -1);
  for (size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) cls[v] = static_cast<int>(i);
  std::set<cops::Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (cls[u] != cls[v])
      edges.insert({std::min(cls[u], cls[v]), std::max(cls[u], cls[v])});
  Graph q(static_cast<int>(classes.size()));
  for (const auto& [u, v] : edges) q.add_edge(u, v);
  return q;
}

int component_count(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  int comps = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace

TEST_CASE("elementary families") {
  REQUIRE(cops::path_graph(1).m() == 0);
  REQUIRE(cops::path_graph(5).m() == 4);
  REQUIRE(cops::cycle_graph(3).m() == 3);
  REQUIRE(cops::cycle_graph(6).m() == 6);
  REQUIRE(cops::complete_graph(5).m() == 10);
  REQUIRE_THROWS_AS(cops::cycle_graph(2), std::invalid_argument);
  REQUIRE_THROWS_AS(cops::path_graph(0), std::invalid_argument);
}

TEST_CASE("generalized Petersen construction") {
  SECTION("GP(5,2) is the Petersen graph") {
    auto inst = cops::gen_gp(5, 2);
    const Graph& g = inst.graph;
    REQUIRE(g.n() == 10);
    REQUIRE(g.m() == 15);
    // Moore graph characterization: 3-regular, diameter 2, girth 5 pins
    // the Petersen graph uniquely.
    for (Vertex v = 0; v < 10; ++v) REQUIRE(g.degree(v) == 3);
    auto d = cops::all_pairs_distances(g);
    int32_t diameter = 0;
    for (Vertex u = 0; u < 10; ++u)
      for (Vertex v = 0; v < 10; ++v) diameter = std::max(diameter, d(u, v));
    REQUIRE(diameter == 2);
    for (const auto& [u, v] : g.edges()) {
      // no triangles
      for (Vertex w = 0; w < 10; ++w)
        REQUIRE_FALSE((g.has_edge(u, w) && g.has_edge(v, w)));
    }
    for (Vertex u = 0; u < 10; ++u)
      for (Vertex v = u + 1; v < 10; ++v) {
        if (g.has_edge(u, v)) continue;
        // no four-cycles: nonadjacent pairs share at most one neighbor
        int common = 0;
        for (Vertex w : g.neighbors(u)) common += g.has_edge(v, w) ? 1 : 0;
        REQUIRE(common <= 1);
      }
  }

  SECTION("edge counts") {
    REQUIRE(cops::gen_gp(7, 3).graph.n() == 14);
    REQUIRE(cops::gen_gp(7, 3).graph.m() == 21);
  }

  SECTION("parameter validation") {
    REQUIRE_THROWS_AS(cops::gen_gp(4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(cops::gen_mgp(6, 3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(cops::gen_mgp(2, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(cops::gen_mgp(5, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(cops::gen_mgp(5, 5, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(cops::gen_mgp(5, 2, 0), std::invalid_argument);
  }
}

TEST_CASE("multi-layer generalized Petersen construction") {
  SECTION("size and regularity") {
    auto inst = cops::gen_mgp(14, 3, 2);
    REQUIRE(inst.graph.n() == 42);
    REQUIRE(inst.graph.m() == 84);
    // Every vertex sees 2 cycle-or-skip neighbors plus its t column mates.
    for (Vertex v = 0; v < inst.graph.n(); ++v)
      REQUIRE(inst.graph.degree(v) == 4);
  }

  SECTION("the single-layer case coincides with GP") {
    for (int n = 3; n <= 12; ++n)
      for (int k = 1; k < n; ++k) {
        if ((2 * k) % n == 0) continue;
        REQUIRE(cops::gen_mgp(n, k, 1).graph == cops::gen_gp(n, k).graph);
      }
  }

  SECTION("labeling round trip") {
    auto inst = cops::gen_mgp(8, 2, 2);
    const auto& lab = inst.labeling;
    for (int j = 0; j <= 2; ++j)
      for (int i = 0; i < 8; ++i) {
        Vertex id = lab.to_id(j, i);
        REQUIRE(id == j * 8 + i);
        REQUIRE(lab.layer_of(id) == j);
        REQUIRE(lab.index_of(id) == i);
      }
    REQUIRE(lab.wrap(-1) == 7);
    REQUIRE(lab.wrap(8) == 0);
    REQUIRE(lab.to_id(1, -1) == 8 + 7);
    REQUIRE_THROWS_AS(lab.to_id(3, 0), std::invalid_argument);
    auto coords = lab.coords();
    REQUIRE(coords.size() == 24);
    for (Vertex v = 0; v < 24; ++v) {
      REQUIRE(coords[v].layer == lab.layer_of(v));
      REQUIRE(coords[v].index == lab.index_of(v));
    }
  }

  SECTION("columns induce complete graphs") {
    auto inst = cops::gen_mgp(10, 2, 2);
    for (int i = 0; i < 10; ++i) {
      std::vector<Vertex> column;
      for (int j = 0; j <= 2; ++j) column.push_back(inst.labeling.to_id(j, i));
      Graph induced = cops::SubgraphView(inst.graph, column).induced_graph();
      REQUIRE(induced.m() == 3);
    }
  }

  SECTION("skip layers decompose into gcd(n,k) cycles") {
    auto check_layers = [](int n, int k, int t) {
      auto inst = cops::gen_mgp(n, k, t);
      const int g = std::gcd(n, k);
      for (int j = 1; j <= t; ++j) {
        std::vector<Vertex> layer;
        for (int i = 0; i < n; ++i) layer.push_back(inst.labeling.to_id(j, i));
        Graph induced = cops::SubgraphView(inst.graph, layer).induced_graph();
        for (Vertex v = 0; v < induced.n(); ++v)
          REQUIRE(induced.degree(v) == 2);
        REQUIRE(component_count(induced) == g);
      }
    };
    check_layers(14, 3, 2);  // gcd 1: a single 14-cycle per layer
    check_layers(8, 2, 1);   // gcd 2: two 4-cycles
    check_layers(10, 2, 2);  // gcd 2: two 5-cycles
  }
}

TEST_CASE("cut vertex blow up") {
  SECTION("path with one blown cut vertex") {
    cops::BlowupSpec spec;
    spec.base = cops::path_graph(3);
    spec.sizes[1] = 2;
    auto res = cops::blow_up(spec);
    REQUIRE(res.graph.n() == 4);
    REQUIRE(res.graph.m() == 5);
    REQUIRE(res.copies[1] == std::vector<Vertex>{1, 2});
    // Complete except for the pair of unblown endpoints.
    REQUIRE_FALSE(res.graph.has_edge(0, 3));
    auto classes = cops::closed_twin_classes(res.graph);
    REQUIRE(classes == std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3}});
  }

  SECTION("identity blow up reproduces the base") {
    Graph base = cops::build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    cops::BlowupSpec spec;
    spec.base = base;
    spec.sizes[2] = 1;
    REQUIRE(cops::blow_up(spec).graph == base);
  }

  SECTION("star center blown to a triangle") {
    cops::BlowupSpec spec;
    spec.base = cops::build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    spec.sizes[0] = 3;
    auto res = cops::blow_up(spec);
    REQUIRE(res.graph.n() == 6);
    REQUIRE(res.graph.m() == 12);
    REQUIRE(res.copies[0] == std::vector<Vertex>{0, 1, 2});
    // The blown center forms a clique joined to every leaf.
    for (Vertex a : res.copies[0])
      for (Vertex l : {3, 4, 5}) REQUIRE(res.graph.has_edge(a, l));
    auto classes = cops::closed_twin_classes(res.graph);
    REQUIRE(classes[0] == std::vector<Vertex>{0, 1, 2});
  }

  SECTION("contracting the copy classes recovers the base") {
    for (uint64_t seed : {11ULL, 12ULL, 13ULL, 14ULL, 15ULL}) {
      Graph base = cops::random_block_graph(seed, 9, 4);
      auto bd = cops::blocks(base);
      cops::BlowupSpec spec;
      spec.base = base;
      cops::Rng rng(seed ^ 0xabcdULL);
      for (Vertex c : bd.cut_vertices) spec.sizes[c] = 1 + rng.below_int(3);
      auto res = cops::blow_up(spec);
      REQUIRE(contract_classes(res.graph, res.copies) == base);
      REQUIRE(cops::is_extended_block_graph(res.graph).holds);
    }
  }

  SECTION("twin-free bases: twin classes of the result are the blown sets") {
    // On a path, no two vertices are closed twins, so the twin classes of
    // the blow-up are exactly the copy classes and contracting them is the
    // same operation as contracting copies.
    Graph base = cops::path_graph(5);
    cops::BlowupSpec spec;
    spec.base = base;
    spec.sizes[1] = 2;
    spec.sizes[3] = 3;
    auto res = cops::blow_up(spec);
    auto classes = cops::closed_twin_classes(res.graph);
    REQUIRE(classes == res.copies);
    REQUIRE(contract_classes(res.graph, classes) == base);
  }

  SECTION("input validation") {
    cops::BlowupSpec bad;
    bad.base = cops::cycle_graph(4);
    REQUIRE_THROWS_AS(cops::blow_up(bad), std::invalid_argument);

    cops::BlowupSpec noncut;
    noncut.base = cops::path_graph(3);
    noncut.sizes[0] = 2;  // endpoint, not a cut vertex
    REQUIRE_THROWS_AS(cops::blow_up(noncut), std::invalid_argument);

    cops::BlowupSpec zero;
    zero.base = cops::path_graph(3);
    zero.sizes[1] = 0;
    REQUIRE_THROWS_AS(cops::blow_up(zero), std::invalid_argument);

    cops::BlowupSpec disc;
    disc.base = cops::build_graph(3, {{0, 1}});
    REQUIRE_THROWS_AS(cops::blow_up(disc), std::invalid_argument);
  }
}

TEST_CASE("fixed seven-vertex counterexample instance") {
  auto fig = cops::figure1_instance();
  REQUIRE(fig.g.n() == 7);
  REQUIRE(fig.g.m() == 12);
  REQUIRE(fig.h_vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  REQUIRE(fig.g.neighbors(6) == std::vector<Vertex>{2, 4, 5});

  auto h = fig.h();
  Graph hg = h.induced_graph();
  REQUIRE(cops::is_dismantlable(hg).dismantlable);

  auto d = cops::all_pairs_distances(fig.g);
  REQUIRE(cops::is_isometric(fig.g, d, h).isometric);
}

TEST_CASE("seeded block graph generator") {
  SECTION("outputs are block graphs, deterministically") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      Graph g = cops::random_block_graph(seed, 10, 4);
      REQUIRE(g.n() == 10);
      REQUIRE(cops::is_connected(g));
      REQUIRE_FALSE(cops::is_block_graph(g).has_value());
      REQUIRE(g == cops::random_block_graph(seed, 10, 4));
    }
  }

  SECTION("single vertex budget") {
    Graph g = cops::random_block_graph(7, 1);
    REQUIRE(g.n() == 1);
  }

  SECTION("clique cap two gives trees") {
    for (uint64_t seed = 100; seed < 110; ++seed) {
      Graph g = cops::random_block_graph(seed, 12, 2);
      REQUIRE(g.m() == g.n() - 1);
      REQUIRE(cops::is_connected(g));
    }
  }

  SECTION("four point condition holds on every output") {
    for (uint64_t seed = 40; seed < 48; ++seed) {
      Graph g = cops::random_block_graph(seed, 9, 5);
      auto d = cops::all_pairs_distances(g);
      REQUIRE_FALSE(cops::check_p1(g, d).has_value());
    }
  }
}

TEST_CASE("seeded vertebrate generator") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    auto inst = cops::random_vertebrate_graph(seed);
    auto d = cops::all_pairs_distances(inst.graph);
    auto chk = cops::verify_backbone(inst.graph, d, inst.backbone);
    REQUIRE(chk.ok);
    // The declared backbone also works as the R of the existential gate
    // property.
    REQUIRE_FALSE(cops::check_p3_with_R(inst.graph, d, inst.backbone)
                      .has_value());
    REQUIRE(inst.graph == cops::random_vertebrate_graph(seed).graph);
  }
}

TEST_CASE("seeded host embedding") {
  Graph h = cops::random_block_graph(3, 7, 3);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = cops::random_host(seed, h, 5);
    REQUIRE(g.n() == h.n() + 5);
    std::vector<Vertex> hv;
    for (Vertex v = 0; v < h.n(); ++v) hv.push_back(v);
    auto d = cops::all_pairs_distances(g);
    REQUIRE(cops::is_isometric(g, d, cops::SubgraphView(g, hv)).isometric);
    // The prefix really is h, untouched.
    Graph prefix = cops::SubgraphView(g, hv).induced_graph();
    REQUIRE(prefix == h);
  }
}

TEST_CASE("seeded connected host pool") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = cops::random_connected_graph(seed, 12);
    REQUIRE(g.n() == 12);
    REQUIRE(cops::is_connected(g));
    REQUIRE(g == cops::random_connected_graph(seed, 12));
  }
}
