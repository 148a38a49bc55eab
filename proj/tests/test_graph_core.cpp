#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "cops/distance.hpp"
#include "cops/enumerate.hpp"
#include "cops/graph.hpp"
#include "cops/io.hpp"
#include "cops/structure.hpp"
#include "cops/subgraph.hpp"

using cops::Graph;
using cops::Vertex;
using Catch::Matchers::ContainsSubstring;

namespace {

constexpr int kInf = 1 << 20;

// Independent distance oracle: Floyd-Warshall over the adjacency matrix,
// no shared code with the BFS implementation under test.
std::vector<std::vector<int>> fw_distances(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

void expect_distances_match(const Graph& g) {
  auto oracle = fw_distances(g);
  auto d = cops::all_pairs_distances(g);
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v) {
      if (oracle[u][v] == kInf) {
        REQUIRE_FALSE(d.reachable(u, v));
      } else {
        REQUIRE(d(u, v) == oracle[u][v]);
      }
    }
}

// Cut vertices by definition: removing v increases the number of
// connected components.
std::vector<Vertex> brute_cut_vertices(const Graph& g) {
  const int n = g.n();
  auto components_without = [&](Vertex skip) {
    std::vector<char> seen(n, 0);
    if (skip >= 0) seen[skip] = 1;
    int comps = 0;
    for (Vertex s = 0; s < n; ++s) {
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
  };
  const int base = components_without(-1);
  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 0 && components_without(v) > base) cuts.push_back(v);
  return cuts;
}

}  // namespace

TEST_CASE("graph construction and adjacency") {
  Graph g(4);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 3);
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 3);
  REQUIRE(g.neighbors(0) == std::vector<Vertex>{1, 2});
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.has_edge(0, 2));
  REQUIRE(g.has_edge(2, 0));
  REQUIRE_FALSE(g.has_edge(2, 3));
  REQUIRE(g.in_closed_nbhd(0, 0));
  REQUIRE(g.in_closed_nbhd(0, 1));
  REQUIRE_FALSE(g.in_closed_nbhd(0, 3));

  SECTION("domination is closed-neighborhood containment") {
    // 1 dominates 3: N[3] = {1,3} within N[1] = {0,1,3}.
    REQUIRE(g.dominates(1, 3));
    REQUIRE_FALSE(g.dominates(3, 1));
  }

  SECTION("rejected edges") {
    REQUIRE_THROWS_WITH(g.add_edge(1, 1), ContainsSubstring("self-loop"));
    REQUIRE_THROWS_WITH(g.add_edge(0, 1), ContainsSubstring("duplicate"));
    REQUIRE_THROWS_WITH(g.add_edge(0, 4), ContainsSubstring("out of range"));
  }

  SECTION("build_graph validates and reorders") {
    Graph h = cops::build_graph(4, {{2, 0}, {0, 1}, {1, 3}});
    REQUIRE(h == g);
    REQUIRE_THROWS_AS(cops::build_graph(2, {{0, 2}}), std::invalid_argument);
  }
}

TEST_CASE("bfs distances agree with the Floyd-Warshall oracle") {
  SECTION("path, cycle, star") {
    Graph p5 = cops::build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    expect_distances_match(p5);
    auto d = cops::all_pairs_distances(p5);
    REQUIRE(d(0, 4) == 4);

    Graph c6 =
        cops::build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    expect_distances_match(c6);
    REQUIRE(cops::all_pairs_distances(c6)(0, 3) == 3);

    Graph star = cops::build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    expect_distances_match(star);
  }

  SECTION("disconnected pairs use the unreachable sentinel") {
    Graph g = cops::build_graph(4, {{0, 1}, {2, 3}});
    expect_distances_match(g);
    auto d = cops::all_pairs_distances(g);
    REQUIRE_FALSE(d.reachable(0, 3));
    REQUIRE(d(0, 3) == cops::DistanceMatrix::kUnreachable);
  }

  SECTION("every connected graph on up to 5 vertices") {
    cops::for_each_connected_graph(5, [](const Graph& g) {
      auto oracle = fw_distances(g);
      auto d = cops::all_pairs_distances(g);
      for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
          if (d(u, v) != oracle[u][v]) FAIL("distance mismatch");
    });
  }
}

TEST_CASE("connected graph counts on small vertex sets") {
  // Known counts of connected labeled graphs: 1, 1, 4, 38, 728.
  REQUIRE(cops::count_connected_graphs(1) == 1);
  REQUIRE(cops::count_connected_graphs(2) == 1);
  REQUIRE(cops::count_connected_graphs(3) == 4);
  REQUIRE(cops::count_connected_graphs(4) == 38);
  REQUIRE(cops::count_connected_graphs(5) == 728);
}

TEST_CASE("gated neighbors") {
  Graph c6 =
      cops::build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto d = cops::all_pairs_distances(c6);
  REQUIRE(cops::gated_neighbors(c6, d, 0, 3) == std::vector<Vertex>{1, 5});
  REQUIRE(cops::gated_neighbors(c6, d, 0, 2) == std::vector<Vertex>{1});

  SECTION("adjacent or equal targets are rejected") {
    REQUIRE_THROWS_WITH(cops::gated_neighbors(c6, d, 0, 1),
                        ContainsSubstring("gate set is undefined"));
    REQUIRE_THROWS_WITH(cops::gated_neighbors(c6, d, 2, 2),
                        ContainsSubstring("gate set is undefined"));
  }

  SECTION("disconnected pairs are rejected with a distinct message") {
    Graph g = cops::build_graph(4, {{0, 1}, {2, 3}});
    auto dd = cops::all_pairs_distances(g);
    REQUIRE_THROWS_WITH(cops::gated_neighbors(g, dd, 0, 3),
                        ContainsSubstring("disconnected"));
  }
}

TEST_CASE("deterministic shortest path extraction") {
  Graph c6 =
      cops::build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto d = cops::all_pairs_distances(c6);
  // Two geodesics exist; the smallest-id first step picks 1.
  REQUIRE(cops::shortest_path_vertices(c6, d, 0, 3) ==
          std::vector<Vertex>{0, 1, 2, 3});
  REQUIRE(cops::shortest_path_vertices(c6, d, 4, 4) == std::vector<Vertex>{4});
}

TEST_CASE("subgraph views") {
  Graph c6 =
      cops::build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  cops::SubgraphView view(c6, {2, 0, 1});
  REQUIRE(view.vertices() == std::vector<Vertex>{0, 1, 2});
  REQUIRE(view.contains(1));
  REQUIRE_FALSE(view.contains(3));
  REQUIRE(view.index_of(2) == 2);
  Graph induced = view.induced_graph();
  REQUIRE(induced.n() == 3);
  REQUIRE(induced.m() == 2);
  REQUIRE(induced.has_edge(0, 1));
  REQUIRE(induced.has_edge(1, 2));

  REQUIRE_THROWS_AS(cops::SubgraphView(c6, {0, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(cops::SubgraphView(c6, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(cops::SubgraphView(c6, {6}), std::invalid_argument);
}

TEST_CASE("isometry detection") {
  Graph c6 =
      cops::build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto d = cops::all_pairs_distances(c6);

  SECTION("half the cycle is isometric") {
    cops::SubgraphView h(c6, {0, 1, 2, 3});
    REQUIRE(cops::is_isometric(c6, d, h).isometric);
  }

  SECTION("longer arcs detour and fail with the first pair") {
    cops::SubgraphView h(c6, {0, 1, 2, 3, 4});
    auto rep = cops::is_isometric(c6, d, h);
    REQUIRE_FALSE(rep.isometric);
    REQUIRE(rep.u == 0);
    REQUIRE(rep.v == 4);
    REQUIRE(rep.dist_sub == 4);
    REQUIRE(rep.dist_parent == 2);
  }

  SECTION("disconnected induced subgraphs report unreachable") {
    cops::SubgraphView h(c6, {0, 3});
    auto rep = cops::is_isometric(c6, d, h);
    REQUIRE_FALSE(rep.isometric);
    REQUIRE(rep.dist_sub == cops::DistanceMatrix::kUnreachable);
  }
}

TEST_CASE("closed twin classes") {
  SECTION("complete graphs collapse to one class") {
    Graph k4 = cops::build_graph(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto classes = cops::closed_twin_classes(k4);
    REQUIRE(classes == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}});
  }

  SECTION("diamond has one nontrivial class") {
    // K4 minus the edge (0,3): 1 and 2 are closed twins.
    Graph g = cops::build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto classes = cops::closed_twin_classes(g);
    REQUIRE(classes ==
            std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3}});
  }

  SECTION("cycles have only trivial classes") {
    Graph c4 = cops::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    REQUIRE(cops::closed_twin_classes(c4).size() == 4);
  }
}

TEST_CASE("block decomposition") {
  auto as_sets = [](std::vector<std::vector<Vertex>> bs) {
    std::set<std::vector<Vertex>> out(bs.begin(), bs.end());
    return out;
  };

  SECTION("path: every edge is a block, inner vertices cut") {
    Graph p4 = cops::build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto bd = cops::blocks(p4);
    REQUIRE(as_sets(bd.blocks) ==
            std::set<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(bd.cut_vertices == std::vector<Vertex>{1, 2});
  }

  SECTION("bowtie: two triangles at a cut vertex") {
    Graph g =
        cops::build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto bd = cops::blocks(g);
    REQUIRE(as_sets(bd.blocks) ==
            std::set<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}});
    REQUIRE(bd.cut_vertices == std::vector<Vertex>{2});
  }

  SECTION("two-connected graphs are a single block") {
    Graph c5 =
        cops::build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto bd = cops::blocks(c5);
    REQUIRE(bd.blocks == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}});
    REQUIRE(bd.cut_vertices.empty());
  }

  SECTION("isolated vertices become singleton blocks") {
    Graph g = cops::build_graph(3, {{1, 2}});
    auto bd = cops::blocks(g);
    REQUIRE(as_sets(bd.blocks) ==
            std::set<std::vector<Vertex>>{{0}, {1, 2}});
    REQUIRE(bd.cut_vertices.empty());
  }

  SECTION("cut vertices match the removal definition on all small graphs") {
    for (int n = 2; n <= 6; ++n)
      cops::for_each_connected_graph(n, [](const Graph& g) {
        if (cops::blocks(g).cut_vertices != brute_cut_vertices(g))
          FAIL("cut vertex mismatch");
      });
  }
}

TEST_CASE("dismantling") {
  SECTION("paths and cliques dismantle") {
    Graph p4 = cops::build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto res = cops::is_dismantlable(p4);
    REQUIRE(res.dismantlable);
    REQUIRE(res.order.size() == 4);
    // Leaf 0 is dominated first; the survivor comes last.
    REQUIRE(res.order.front() == 0);

    Graph k3 = cops::build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(cops::is_dismantlable(k3).dismantlable);

    Graph k1(1);
    auto single = cops::is_dismantlable(k1);
    REQUIRE(single.dismantlable);
    REQUIRE(single.order == std::vector<Vertex>{0});
  }

  SECTION("cycles of length at least four do not") {
    Graph c4 = cops::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    REQUIRE_FALSE(cops::is_dismantlable(c4).dismantlable);
    Graph c5 =
        cops::build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    REQUIRE_FALSE(cops::is_dismantlable(c5).dismantlable);
  }

  SECTION("chordal graphs dismantle via simplicial vertices") {
    // Two triangles sharing an edge, plus a pendant.
    Graph g =
        cops::build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    REQUIRE(cops::is_dismantlable(g).dismantlable);
  }

  SECTION("preconditions") {
    REQUIRE_THROWS_AS(cops::is_dismantlable(Graph(0)), std::invalid_argument);
    Graph disc = cops::build_graph(3, {{0, 1}});
    REQUIRE_THROWS_AS(cops::is_dismantlable(disc), std::invalid_argument);
  }
}

TEST_CASE("graph text io") {
  Graph g = cops::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

  SECTION("round trip") {
    std::string text = cops::graph_to_string(g);
    REQUIRE(cops::graph_from_string(text) == g);
  }

  SECTION("comments and blank lines are skipped") {
    REQUIRE(cops::graph_from_string("# a square\n\np 4 4\ne 0 1\ne 1 2\n"
                                    "e 2 3\ne 0 3\n") == g);
  }

  SECTION("parse errors carry line numbers") {
    REQUIRE_THROWS_WITH(cops::graph_from_string("p 2 1\np 2 1\n"),
                        ContainsSubstring("line 2"));
    REQUIRE_THROWS_WITH(cops::graph_from_string("e 0 1\n"),
                        ContainsSubstring("edge before header"));
    REQUIRE_THROWS_WITH(cops::graph_from_string("p 2 2\ne 0 1\n"),
                        ContainsSubstring("declares 2 edges"));
    REQUIRE_THROWS_WITH(cops::graph_from_string("p 2 1\nq 0 1\n"),
                        ContainsSubstring("unknown record"));
    REQUIRE_THROWS_AS(cops::graph_from_string(""), std::invalid_argument);
  }

  SECTION("layer coordinate side files") {
    std::vector<cops::LayerCoord> coords{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    std::ostringstream os;
    cops::write_layer_coords(os, coords);
    std::istringstream is(os.str());
    auto back = cops::read_layer_coords(is);
    REQUIRE(back.size() == coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
      REQUIRE(back[i].layer == coords[i].layer);
      REQUIRE(back[i].index == coords[i].index);
    }
    std::istringstream bad("v 1 0 0\n");
    REQUIRE_THROWS_WITH(cops::read_layer_coords(bad),
                        ContainsSubstring("consecutive"));
  }
}
