#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <queue>
#include <vector>

#include "cops/families.hpp"
#include "cops/guard.hpp"
#include "cops/guard_game.hpp"
#include "cops/random_families.hpp"
#include "cops/structure.hpp"
#include "cops/subgraph.hpp"

using cops::Forcing;
using cops::GuardArena;
using cops::GuardCase;
using cops::GuardOutcome;
using cops::GuardWinner;
using cops::Graph;
using cops::Vertex;

namespace {

// Independent potential oracle: fresh single-source BFS per query, no shared
// distance matrix, direct scan over the subgraph vertices.
std::vector<int> bfs_from(const Graph& g, Vertex s) {
  std::vector<int> dist(g.n(), -1);
  std::queue<Vertex> q;
  q.push(s);
  dist[s] = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

int potential_oracle(const Graph& g, const std::vector<Vertex>& h, Vertex c,
                     Vertex r) {
  auto from_r = bfs_from(g, r);
  auto from_c = bfs_from(g, c);
  int best = INT32_MAX;
  for (Vertex x : h) best = std::min(best, from_r[x] - from_c[x]);
  return best;
}

GuardArena c6_path_arena() {
  return cops::make_backbone_arena(cops::cycle_graph(6), {0, 1, 2, 3});
}

GuardArena figure1_arena() {
  auto fig = cops::figure1_instance();
  return GuardArena(fig.g, fig.h_vertices, fig.h_vertices);
}

}  // namespace

TEST_CASE("potential function") {
  GuardArena a = c6_path_arena();

  SECTION("a cop sharing the robber's vertex scores zero") {
    for (Vertex v : a.h_vertices()) REQUIRE(a.potential(v, v) == 0);
  }

  SECTION("robber inside the subgraph forces minus the distance") {
    GuardArena p(cops::path_graph(4), {0, 1, 2, 3}, {0, 1, 2, 3});
    REQUIRE(p.potential(1, 3) == -2);
    for (Vertex c : p.region())
      for (Vertex r : p.h_vertices())
        REQUIRE(p.potential(c, r) == -p.dist()(c, r));
  }

  SECTION("agrees with the scan oracle everywhere, including off-region cops") {
    GuardArena f = figure1_arena();
    for (const GuardArena* arena : {&a, &f})
      for (Vertex c : arena->h_vertices())
        for (Vertex r = 0; r < arena->g().n(); ++r)
          REQUIRE(arena->potential(c, r) ==
                  potential_oracle(arena->g(), arena->h_vertices(), c, r));
  }

  SECTION("triangle bounds hold at every pair") {
    for (Vertex c : a.region())
      for (Vertex r = 0; r < a.g().n(); ++r) {
        int f = a.potential(c, r);
        REQUIRE(f <= a.dist()(r, c));
        REQUIRE(f >= -a.dist()(r, c));
      }
  }

  SECTION("input validation") {
    REQUIRE_THROWS_AS(a.potential(5, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(a.potential(0, 9), std::invalid_argument);
  }
}

TEST_CASE("arena construction rules") {
  Graph c6 = cops::cycle_graph(6);

  SECTION("subgraph must be isometric") {
    REQUIRE_THROWS_WITH(GuardArena(cops::cycle_graph(5), {0, 1, 2, 3},
                                   {0, 1, 2, 3}),
                        Catch::Matchers::ContainsSubstring("not isometric"));
  }

  SECTION("region must sit inside the subgraph and dominate it") {
    REQUIRE_THROWS_WITH(GuardArena(c6, {0, 1, 2, 3}, {0, 4}),
                        Catch::Matchers::ContainsSubstring("outside"));
    REQUIRE_THROWS_WITH(GuardArena(c6, {0, 1, 2, 3}, {0}),
                        Catch::Matchers::ContainsSubstring("dominate"));
    REQUIRE_THROWS_AS(GuardArena(c6, {0, 1, 2, 3}, {}), std::invalid_argument);
  }

  SECTION("host must be connected") {
    Graph g(3);
    g.add_edge(0, 1);
    REQUIRE_THROWS_WITH(GuardArena(g, {0, 1}, {0, 1}),
                        Catch::Matchers::ContainsSubstring("connected"));
  }

  SECTION("backbone arenas reject unguardable subgraphs") {
    Graph c4 = cops::cycle_graph(4);
    REQUIRE_THROWS_WITH(cops::make_backbone_arena(c4, {0, 1, 2, 3}),
                        Catch::Matchers::ContainsSubstring("no backbone"));
  }
}

TEST_CASE("cop reply rules") {
  GuardArena a = c6_path_arena();

  SECTION("rising potential from below zero keeps the cop in place") {
    // c=0, robber walks from 4 to 5: f(0,4) = -2, f(0,5) = -1.
    REQUIRE(a.potential(0, 4) == -2);
    auto mv = cops::guard_move(a, 0, 5, -2);
    REQUIRE(mv.cop == 0);
    REQUIRE(mv.tag == GuardCase::StayNeg);
  }

  SECTION("nonnegative potential at zero keeps the cop in place") {
    REQUIRE(a.potential(1, 5) == 0);
    auto mv = cops::guard_move(a, 1, 5, 0);
    REQUIRE(mv.cop == 1);
    REQUIRE(mv.tag == GuardCase::StayZero);
  }

  SECTION("a potential dropping below zero forces an advance") {
    REQUIRE(a.potential(2, 5) == -1);
    auto mv = cops::guard_move(a, 2, 5, 0);
    REQUIRE(mv.tag == GuardCase::Advance);
    REQUIRE(mv.cop == 1);
  }

  SECTION("adjacent robber on the subgraph is taken") {
    auto mv = cops::guard_move(a, 1, 2, 0);
    REQUIRE(mv.cop == 2);
    REQUIRE(mv.tag == GuardCase::Capture);
  }

  SECTION("one-step monotonicity over every state and robber move") {
    for (Vertex c : a.region())
      for (Vertex r = 0; r < a.g().n(); ++r) {
        int f = std::min(a.potential(c, r), 0);
        std::vector<Vertex> moves = a.g().neighbors(r);
        moves.push_back(r);
        for (Vertex r2 : moves) {
          auto mv = cops::guard_move(a, c, r2, f);
          if (mv.tag == GuardCase::Capture) continue;
          REQUIRE(a.potential(mv.cop, r2) >= f);
        }
      }
  }

  SECTION("an invalid guard set is reported, not silently tolerated") {
    Graph c4 = cops::cycle_graph(4);
    GuardArena bad(c4, {0, 1, 2, 3}, {0, 1, 2, 3});
    REQUIRE_THROWS_WITH(cops::guard_move(bad, 0, 2, -1),
                        Catch::Matchers::ContainsSubstring("witness"));
  }

  SECTION("precondition checks") {
    REQUIRE_THROWS_AS(cops::guard_move(a, 0, 3, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(cops::guard_move(a, 4, 3, 0), std::invalid_argument);
  }
}

TEST_CASE("guard simulation") {
  GuardArena a = c6_path_arena();

  SECTION("stationary robber is run down by the helper cop") {
    auto t = cops::simulate_guard(a, cops::stationary_robber(),
                                  Forcing::HelperCop, 40, 4);
    REQUIRE(t.outcome == GuardOutcome::Captured);
    // Helper starts on the cop; capture within d(helper, robber) + diameter.
    REQUIRE(static_cast<int>(t.steps.size()) <= a.dist()(0, 4) + 3);
  }

  SECTION("restless forcing rejects a robber that stays") {
    REQUIRE_THROWS_WITH(cops::simulate_guard(a, cops::stationary_robber(),
                                             Forcing::Restless, 10, 4),
                        Catch::Matchers::ContainsSubstring("must move"));
  }

  SECTION("tiny budgets report exhaustion, not a verdict") {
    auto t = cops::simulate_guard(a, cops::stationary_robber(),
                                  Forcing::HelperCop, 1, 4);
    REQUIRE(t.outcome == GuardOutcome::BudgetExhausted);
  }

  SECTION("trace invariants: legal moves and potential bounds") {
    auto policy = cops::replay_robber({5, 0, 5, 4, 3});
    auto t = cops::simulate_guard(a, policy, Forcing::HelperCop, 5, 4);
    Vertex pc = t.cop_start, pr = t.robber_start;
    for (const auto& s : t.steps) {
      REQUIRE((s.cop == pc || a.g().has_edge(s.cop, pc)));
      REQUIRE((s.robber == pr || a.g().has_edge(s.robber, pr)));
      REQUIRE(s.f <= a.dist()(s.robber, s.cop));
      REQUIRE(s.f >= -a.dist()(s.robber, s.cop));
      if (a.in_h(s.robber)) REQUIRE(s.f == -a.dist()(s.cop, s.robber));
      pc = s.cop;
      pr = s.robber;
    }
  }
}

TEST_CASE("exhaustive audit of the guard strategy") {
  SECTION("isometric path in a cycle") {
    GuardArena a = c6_path_arena();
    for (Forcing forcing : {Forcing::HelperCop, Forcing::Restless}) {
      auto audit = cops::audit_guard(a, forcing);
      INFO(audit.defect);
      REQUIRE(audit.escaped);
      REQUIRE(audit.monotone);
      REQUIRE(audit.post_safe);
      REQUIRE(audit.max_rounds <= a.g().n() * a.g().n());
    }
  }

  SECTION("worst line replays through the simulator") {
    GuardArena a = c6_path_arena();
    auto audit = cops::audit_guard(a, Forcing::Restless);
    REQUIRE(audit.escaped);
    if (!audit.worst_moves.empty()) {
      auto t = cops::simulate_guard(
          a, cops::replay_robber(audit.worst_moves), Forcing::Restless,
          static_cast<int>(audit.worst_moves.size()), audit.worst_start);
      bool reached = false;
      for (const auto& s : t.steps)
        if (s.f >= 0) {
          REQUIRE(s.round <= audit.max_rounds);
          reached = true;
          break;
        }
      REQUIRE((reached || t.outcome == GuardOutcome::Captured));
    }
  }

  SECTION("random vertebrate subgraphs inside random hosts") {
    for (uint64_t seed = 60; seed < 66; ++seed) {
      auto inst = cops::random_vertebrate_graph(seed);
      Graph host = cops::random_host(seed + 1000, inst.graph, 4);
      std::vector<Vertex> h(static_cast<size_t>(inst.graph.n()));
      for (size_t i = 0; i < h.size(); ++i) h[i] = static_cast<Vertex>(i);
      GuardArena a(host, h, inst.backbone);
      for (Forcing forcing : {Forcing::HelperCop, Forcing::Restless}) {
        auto audit = cops::audit_guard(a, forcing);
        INFO("seed " << seed << ": " << audit.defect);
        REQUIRE(audit.escaped);
        REQUIRE(audit.monotone);
        REQUIRE(audit.post_safe);
        REQUIRE(audit.max_rounds <= host.n() * host.n());
      }
    }
  }
}

TEST_CASE("guard game solver") {
  SECTION("isometric path in a cycle is guarded") {
    auto res = cops::solve_guard_game(cops::cycle_graph(6), {0, 1, 2, 3},
                                      {0, 1, 2, 3});
    REQUIRE(res.winner() == GuardWinner::Cop);
    REQUIRE(res.cop_start().has_value());
  }

  SECTION("single vertex is guarded by sitting on it") {
    auto res = cops::solve_guard_game(cops::cycle_graph(5), {2}, {2});
    REQUIRE(res.winner() == GuardWinner::Cop);
    REQUIRE(res.cop_start() == 2);
  }

  SECTION("a cycle cannot be guarded inside itself") {
    auto res = cops::solve_guard_game(cops::cycle_graph(4), {0, 1, 2, 3},
                                      {0, 1, 2, 3});
    REQUIRE(res.winner() == GuardWinner::Robber);
  }

  SECTION("restricted and full regions agree on a vertebrate fixture") {
    Graph g = cops::build_graph(
        5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}});
    auto restricted = cops::solve_guard_game(g, {0, 1, 2, 3, 4}, {1, 2});
    auto full =
        cops::solve_guard_game(g, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4});
    REQUIRE(restricted.winner() == GuardWinner::Cop);
    REQUIRE(full.winner() == GuardWinner::Cop);
  }

  SECTION("non-isometric subgraphs are rejected") {
    REQUIRE_THROWS_WITH(
        cops::solve_guard_game(cops::cycle_graph(5), {0, 1, 2, 3},
                               {0, 1, 2, 3}),
        Catch::Matchers::ContainsSubstring("not isometric"));
  }

  SECTION("the seven-vertex fixture defeats one cop") {
    auto fig = cops::figure1_instance();
    auto res =
        cops::solve_guard_game(fig.g, fig.h_vertices, fig.h_vertices);
    REQUIRE(res.winner() == GuardWinner::Robber);

    // Replaying the extracted strategy against a chasing cop must keep
    // producing breaches long after any finite settling time.
    auto d = cops::all_pairs_distances(fig.g);
    Vertex c = 0;
    Vertex r = -1;
    for (Vertex v = 0; v < fig.g.n(); ++v)
      if (v != c && !res.cop_wins_from(c, v, cops::GuardTurn::RobberMove)) {
        r = v;
        break;
      }
    REQUIRE(r >= 0);
    auto in_h = [&](Vertex v) {
      return std::binary_search(fig.h_vertices.begin(), fig.h_vertices.end(),
                                v);
    };
    int breaches_late = 0;
    for (int round = 1; round <= 400; ++round) {
      auto reply = res.robber_reply(c, r);
      REQUIRE(reply.has_value());
      r = *reply;
      // The strategy never walks into an immediate loss.
      REQUIRE_FALSE((in_h(r) && (c == r || fig.g.has_edge(c, r))));
      if (res.is_breach(c, r) && round > 100) ++breaches_late;
      // Chasing cop: step inside H toward the robber, never onto it.
      Vertex best = c;
      for (Vertex w : fig.g.neighbors(c))
        if (in_h(w) && w != r && d(w, r) < d(best, r)) best = w;
      c = best;
    }
    REQUIRE(breaches_late >= 3);
  }

  SECTION("solved cop wins imply a dismantlable subgraph") {
    for (auto [g, h] : std::vector<std::pair<Graph, std::vector<Vertex>>>{
             {cops::cycle_graph(6), {0, 1, 2, 3}},
             {cops::cycle_graph(5), {2}},
             {cops::path_graph(5), {1, 2, 3}}}) {
      auto res = cops::solve_guard_game(g, h, h);
      REQUIRE(res.winner() == GuardWinner::Cop);
      cops::SubgraphView view(g, h);
      REQUIRE(cops::is_dismantlable(view.induced_graph()).dismantlable);
    }
  }

  SECTION("solver agrees with the audited strategy on random arenas") {
    for (uint64_t seed = 70; seed < 76; ++seed) {
      auto inst = cops::random_vertebrate_graph(seed);
      Graph host = cops::random_host(seed + 2000, inst.graph, 3);
      std::vector<Vertex> h(static_cast<size_t>(inst.graph.n()));
      for (size_t i = 0; i < h.size(); ++i) h[i] = static_cast<Vertex>(i);
      auto res = cops::solve_guard_game(host, h, inst.backbone);
      REQUIRE(res.winner() == GuardWinner::Cop);
    }
  }
}
