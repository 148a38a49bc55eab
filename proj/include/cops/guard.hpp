#pragma once
// One-cop guarding of an isometric subgraph H inside a host G, driven by the
// potential f(c,r) = min over x in V(H) of d(r,x) - d(c,x).  A nonnegative
// potential certifies the guard position: any robber step into H then lands
// inside N[c] and is captured on the reply.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/backbone.hpp"
#include "cops/distance.hpp"
#include "cops/graph.hpp"
#include "cops/subgraph.hpp"

namespace cops {

inline constexpr Vertex kNoVertex = -1;

// Host graph, guarded vertex set, and the cop's allowed positions.
// Construction enforces: connected host, H isometric in G, region a nonempty
// subset of H whose closed neighborhood covers H.  Potentials for cops inside
// the region are tabulated once.
class GuardArena {
 public:
  GuardArena(Graph host, std::vector<Vertex> h_vertices,
             std::vector<Vertex> region)
      : g_(std::move(host)), h_(std::move(h_vertices)) {
    if (!is_connected(g_))
      throw std::invalid_argument("GuardArena: host graph must be connected");
    SubgraphView view(g_, h_);
    h_ = view.vertices();
    d_ = all_pairs_distances(g_);
    auto iso = is_isometric(g_, d_, view);
    if (!iso.isometric)
      throw std::invalid_argument(
          "GuardArena: guarded subgraph is not isometric in the host "
          "(vertices " +
          std::to_string(iso.u) + " and " + std::to_string(iso.v) + ")");

    std::sort(region.begin(), region.end());
    if (region.empty())
      throw std::invalid_argument("GuardArena: cop region is empty");
    if (std::adjacent_find(region.begin(), region.end()) != region.end())
      throw std::invalid_argument("GuardArena: duplicate vertex in cop region");
    in_h_.assign(static_cast<size_t>(g_.n()), 0);
    for (Vertex v : h_) in_h_[static_cast<size_t>(v)] = 1;
    for (Vertex v : region)
      if (!in_h(v))
        throw std::invalid_argument(
            "GuardArena: cop region vertex " + std::to_string(v) +
            " lies outside the guarded subgraph");
    region_ = std::move(region);
    region_pos_.assign(static_cast<size_t>(g_.n()), -1);
    for (size_t i = 0; i < region_.size(); ++i)
      region_pos_[static_cast<size_t>(region_[i])] = static_cast<int>(i);
    for (Vertex x : h_) {
      bool covered = false;
      for (Vertex c : region_)
        if (d_(c, x) <= 1) {
          covered = true;
          break;
        }
      if (!covered)
        throw std::invalid_argument(
            "GuardArena: cop region does not dominate subgraph vertex " +
            std::to_string(x));
    }

    pot_.assign(region_.size() * static_cast<size_t>(g_.n()), 0);
    for (size_t i = 0; i < region_.size(); ++i)
      for (Vertex r = 0; r < g_.n(); ++r)
        pot_[i * static_cast<size_t>(g_.n()) + static_cast<size_t>(r)] =
            scan_potential(region_[i], r);
  }

  const Graph& g() const { return g_; }
  const std::vector<Vertex>& h_vertices() const { return h_; }
  const std::vector<Vertex>& region() const { return region_; }
  const DistanceMatrix& dist() const { return d_; }
  SubgraphView h_view() const { return SubgraphView(g_, h_); }

  bool in_h(Vertex v) const {
    return v >= 0 && v < g_.n() && in_h_[static_cast<size_t>(v)] != 0;
  }
  bool in_region(Vertex v) const {
    return v >= 0 && v < g_.n() && region_pos_[static_cast<size_t>(v)] >= 0;
  }

  // f(c,r); O(1) for cops in the region, one scan otherwise.
  int32_t potential(Vertex c, Vertex r) const {
    if (!in_h(c))
      throw std::invalid_argument(
          "potential: cop vertex must lie in the guarded subgraph");
    if (r < 0 || r >= g_.n())
      throw std::invalid_argument("potential: robber vertex out of range");
    int idx = region_pos_[static_cast<size_t>(c)];
    if (idx >= 0)
      return pot_[static_cast<size_t>(idx) * static_cast<size_t>(g_.n()) +
                  static_cast<size_t>(r)];
    return scan_potential(c, r);
  }

 private:
  int32_t scan_potential(Vertex c, Vertex r) const {
    int32_t best = std::numeric_limits<int32_t>::max();
    for (Vertex x : h_) best = std::min(best, d_(r, x) - d_(c, x));
    return best;
  }

  Graph g_;
  std::vector<Vertex> h_;
  std::vector<Vertex> region_;
  DistanceMatrix d_;
  std::vector<char> in_h_;
  std::vector<int> region_pos_;
  std::vector<int32_t> pot_;
};

inline int32_t potential(const GuardArena& a, Vertex c, Vertex r) {
  return a.potential(c, r);
}

// Arena whose cop region is a backbone of the guarded subgraph, found by
// searching the induced copy of H.  Throws when no backbone exists (the
// subgraph is not vertebrate) or the search is inconclusive.
inline GuardArena make_backbone_arena(Graph host,
                                      std::vector<Vertex> h_vertices) {
  SubgraphView view(host, std::move(h_vertices));
  Graph induced = view.induced_graph();
  auto di = all_pairs_distances(induced);
  auto found = find_backbone(induced, di);
  if (found.status == BackboneStatus::None)
    throw std::invalid_argument(
        "make_backbone_arena: guarded subgraph has no backbone");
  if (found.status == BackboneStatus::Unknown)
    throw std::invalid_argument(
        "make_backbone_arena: backbone search inconclusive for this size");
  std::vector<Vertex> region;
  region.reserve(found.certificate->guard_set.size());
  for (Vertex local : found.certificate->guard_set)
    region.push_back(view.vertices()[static_cast<size_t>(local)]);
  std::vector<Vertex> h = view.vertices();
  return GuardArena(std::move(host), std::move(h), std::move(region));
}

enum class GuardCase : uint8_t { Capture, StayNeg, StayZero, Advance };

inline const char* to_string(GuardCase c) {
  switch (c) {
    case GuardCase::Capture: return "capture";
    case GuardCase::StayNeg: return "stay";
    case GuardCase::StayZero: return "stay-zero";
    case GuardCase::Advance: return "advance";
  }
  return "?";
}

struct GuardMove {
  Vertex cop;
  GuardCase tag;
};

// The cop's reply after the robber moved to r_new, given the potential
// f_old <= 0 of the pre-move state.  Either stays, captures a robber inside
// N[c] on a subgraph vertex, or advances to a gate witness c' that keeps the
// potential from decreasing.  The witness search scans minimizing targets x*
// in ascending order and, within each, gate vertices in ascending order, so
// replays are deterministic.
inline GuardMove guard_move(const GuardArena& a, Vertex c, Vertex r_new,
                            int32_t f_old) {
  if (!a.in_region(c))
    throw std::invalid_argument("guard_move: cop must stand in the region");
  if (r_new < 0 || r_new >= a.g().n())
    throw std::invalid_argument("guard_move: robber vertex out of range");
  if (f_old > 0)
    throw std::invalid_argument("guard_move: requires f_old <= 0");
  const auto& d = a.dist();

  if (a.in_h(r_new) && d(c, r_new) <= 1) return {r_new, GuardCase::Capture};

  int32_t f_new = a.potential(c, r_new);
  if (f_old < 0 && f_new > f_old) return {c, GuardCase::StayNeg};
  if (f_old == 0 && f_new >= 0) return {c, GuardCase::StayZero};

  // Advance: pick the smallest minimizing x*, then the smallest gate c' in
  // the region such that every far y in H satisfies one of the two metric
  // alternatives.  Existence is guaranteed when the region is a verified
  // backbone; absence means the arena was built from an invalid guard set.
  for (Vertex x : a.h_vertices()) {
    if (d(r_new, x) - d(c, x) != f_new) continue;
    for (Vertex cp : a.g().neighbors(c)) {
      if (!a.in_region(cp)) continue;
      if (d(cp, x) + 1 != d(c, x)) continue;
      bool ok = true;
      for (Vertex y : a.h_vertices()) {
        if (d(cp, y) < 2) continue;
        if (d(c, y) == 1 + d(cp, y)) continue;
        if (d(x, y) == d(x, cp) + d(cp, y)) continue;
        ok = false;
        break;
      }
      if (!ok) continue;
      return {cp, GuardCase::Advance};
    }
  }
  throw std::runtime_error(
      "guard_move: no admissible witness from cop vertex " +
      std::to_string(c) + " against robber vertex " + std::to_string(r_new) +
      " (region is not a valid guard set)");
}

enum class Forcing : uint8_t { HelperCop, Restless };
enum class GuardOutcome : uint8_t { Guarded, Captured, Breach, BudgetExhausted };

inline const char* to_string(GuardOutcome o) {
  switch (o) {
    case GuardOutcome::Guarded: return "guarded";
    case GuardOutcome::Captured: return "captured";
    case GuardOutcome::Breach: return "breach";
    case GuardOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

// One completed round: the robber's move followed by the cop replies.
// f is the potential after the cop's reply; helper is kNoVertex when the
// simulation runs without the auxiliary cop.
struct GuardStep {
  int round;
  Vertex robber;
  Vertex cop;
  GuardCase tag;
  int32_t f;
  Vertex helper;
};

struct GuardTrace {
  Vertex cop_start;
  Vertex robber_start;
  Vertex helper_start;
  GuardOutcome outcome;
  std::vector<GuardStep> steps;
};

// Robber controller: receives the positions before its move and returns the
// vertex it moves to (possibly its own, where the mode allows staying).
using RobberPolicy = std::function<Vertex(const GuardArena&, Vertex cop,
                                          Vertex robber, Vertex helper,
                                          int round)>;

// Plays guard_move against the given robber for at most max_rounds rounds;
// the robber moves first each round.  Under HelperCop an auxiliary cop walks
// a shortest path toward the robber's current vertex each round, so a robber
// that stays put loses ground; under Restless the robber must change vertex
// every round.  Breach marks the defect of a robber standing on a subgraph
// vertex outside N[c] after the potential has been nonnegative.
inline GuardTrace simulate_guard(const GuardArena& a, const RobberPolicy& rob,
                                 Forcing forcing, int max_rounds,
                                 Vertex robber_start,
                                 std::optional<Vertex> cop_start = {},
                                 std::optional<Vertex> helper_start = {}) {
  if (max_rounds < 1)
    throw std::invalid_argument("simulate_guard: max_rounds must be >= 1");
  Vertex c = cop_start.value_or(a.region().front());
  if (!a.in_region(c))
    throw std::invalid_argument("simulate_guard: cop start outside region");
  if (robber_start < 0 || robber_start >= a.g().n())
    throw std::invalid_argument("simulate_guard: robber start out of range");
  bool with_helper = forcing == Forcing::HelperCop;
  Vertex p = with_helper ? helper_start.value_or(c) : kNoVertex;

  GuardTrace trace{c, robber_start, p, GuardOutcome::BudgetExhausted, {}};
  Vertex r = robber_start;
  if (r == c || (with_helper && r == p)) {
    trace.outcome = GuardOutcome::Captured;
    return trace;
  }
  int32_t f = a.potential(c, r);
  bool guarded = f >= 0;
  const auto& d = a.dist();

  for (int round = 1; round <= max_rounds; ++round) {
    Vertex r_new = rob(a, c, r, p, round);
    if (r_new < 0 || r_new >= a.g().n() ||
        (r_new != r && !a.g().has_edge(r, r_new)))
      throw std::invalid_argument("simulate_guard: illegal robber move");
    if (forcing == Forcing::Restless && r_new == r)
      throw std::invalid_argument(
          "simulate_guard: robber must move under restless forcing");
    r = r_new;
    if (guarded && a.in_h(r) && d(c, r) > 1) {
      trace.steps.push_back({round, r, c, GuardCase::StayNeg, f, p});
      trace.outcome = GuardOutcome::Breach;
      return trace;
    }
    if (r == c || (with_helper && r == p)) {
      trace.steps.push_back({round, r, c, GuardCase::Capture, f, p});
      trace.outcome = GuardOutcome::Captured;
      return trace;
    }

    GuardMove mv = guard_move(a, c, r, std::min<int32_t>(f, 0));
    c = mv.cop;
    if (mv.tag == GuardCase::Capture) {
      trace.steps.push_back({round, r, c, mv.tag, a.potential(c, r), p});
      trace.outcome = GuardOutcome::Captured;
      return trace;
    }
    if (with_helper && p != r) {
      if (d(p, r) == 1)
        p = r;
      else
        p = shortest_path_vertices(a.g(), d, p, r)[1];
    }
    f = a.potential(c, r);
    guarded = guarded || f >= 0;
    trace.steps.push_back({round, r, c, mv.tag, f, p});
    if (with_helper && p == r) {
      trace.outcome = GuardOutcome::Captured;
      return trace;
    }
  }
  if (guarded) trace.outcome = GuardOutcome::Guarded;
  return trace;
}

inline RobberPolicy stationary_robber() {
  return [](const GuardArena&, Vertex, Vertex r, Vertex, int) { return r; };
}

// Replays a fixed move list; stays once the list is exhausted.
inline RobberPolicy replay_robber(std::vector<Vertex> moves) {
  return [moves = std::move(moves)](const GuardArena&, Vertex, Vertex r,
                                    Vertex, int round) {
    size_t i = static_cast<size_t>(round - 1);
    return i < moves.size() ? moves[i] : r;
  };
}

// Exhaustive audit of the scripted strategy from a fixed cop start against
// every robber placement and every robber play.  The cop and helper replies
// are deterministic, so the game tree branches only on robber moves; states
// are (cop, robber, helper) triples and each is explored once.
//
//   escaped    every play reaches potential >= 0 or a capture,
//   max_rounds longest such play (infinite plays set escaped = false),
//   monotone   no explored reply ever decreased a potential that was <= 0,
//   post_safe  from every reachable state with potential >= 0, robber moves
//              into the subgraph always land inside N[cop].
//
// worst_start / worst_moves replay the longest line through simulate_guard.
struct GuardAudit {
  bool escaped = true;
  int max_rounds = 0;
  bool monotone = true;
  bool post_safe = true;
  Vertex worst_start = kNoVertex;
  std::vector<Vertex> worst_moves;
  std::string defect;
};

namespace detail {

struct AuditContext {
  const GuardArena& a;
  Forcing forcing;
  int n;
  bool with_helper;
  // Longest rounds-to-safety per robber-to-move state; kInfRounds marks a
  // state from which the robber can keep the potential negative forever.
  static constexpr int32_t kInfRounds = std::numeric_limits<int32_t>::max();
  std::vector<int32_t> score;
  std::vector<int8_t> color;  // 0 new, 1 on stack, 2 done
  std::vector<char> seen_safe;
  GuardAudit* out;

  AuditContext(const GuardArena& arena, Forcing f, GuardAudit* audit)
      : a(arena), forcing(f), n(arena.g().n()),
        with_helper(f == Forcing::HelperCop), out(audit) {
    size_t states = static_cast<size_t>(a.region().size()) *
                    static_cast<size_t>(n) *
                    (with_helper ? static_cast<size_t>(n) : 1);
    score.assign(states, -1);
    color.assign(states, 0);
    seen_safe.assign(states, 0);
  }

  size_t key(Vertex c, Vertex r, Vertex p) const {
    size_t idx = 0;
    const auto& reg = a.region();
    idx = static_cast<size_t>(
        std::lower_bound(reg.begin(), reg.end(), c) - reg.begin());
    idx = idx * static_cast<size_t>(n) + static_cast<size_t>(r);
    if (with_helper) idx = idx * static_cast<size_t>(n) + static_cast<size_t>(p);
    return idx;
  }

  Vertex helper_step(Vertex p, Vertex r) const {
    if (p == r || a.dist()(p, r) == 1) return r;
    return shortest_path_vertices(a.g(), a.dist(), p, r)[1];
  }

  void note_defect(const std::string& msg) {
    if (out->defect.empty()) out->defect = msg;
  }

  // Robber's successor vertices at (c, r); staying is legal except under
  // Restless.  Suicidal moves are kept: they terminate the branch.
  void robber_moves(Vertex r, std::vector<Vertex>& buf) const {
    buf.clear();
    if (forcing != Forcing::Restless) buf.push_back(r);
    for (Vertex w : a.g().neighbors(r)) buf.push_back(w);
  }

  // One cop+helper reply to the robber arriving at r_new.  Returns false when
  // the branch terminates (a capture).
  bool respond(Vertex& c, Vertex& p, Vertex r_new, int32_t f_state) {
    if (r_new == c || (with_helper && r_new == p)) return false;
    GuardMove mv = guard_move(a, c, r_new, std::min<int32_t>(f_state, 0));
    if (mv.tag == GuardCase::Capture) return false;
    c = mv.cop;
    int32_t f_after = a.potential(c, r_new);
    if (f_state <= 0 && f_after < f_state) {
      out->monotone = false;
      note_defect("potential dropped from " + std::to_string(f_state) +
                  " to " + std::to_string(f_after) + " at cop " +
                  std::to_string(c) + ", robber " + std::to_string(r_new));
    }
    if (with_helper) {
      p = helper_step(p, r_new);
      if (p == r_new) return false;
    }
    return true;
  }

  // Longest play (in rounds) until the potential turns nonnegative, from the
  // robber-to-move state (c, r, p) with negative potential.
  int32_t negative_phase(Vertex c0, Vertex r0, Vertex p0) {
    struct Frame {
      Vertex c, r, p;
      size_t k;
      std::vector<Vertex> moves;
      size_t next;
      int32_t best;
    };
    std::vector<Frame> stack;
    auto push = [&](Vertex c, Vertex r, Vertex p) {
      Frame fr{c, r, p, key(c, r, p), {}, 0, 0};
      robber_moves(r, fr.moves);
      color[fr.k] = 1;
      stack.push_back(std::move(fr));
    };
    push(c0, r0, p0);
    int32_t result = 0;

    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.best == kInfRounds) fr.next = fr.moves.size();
      if (fr.next == fr.moves.size()) {
        score[fr.k] = fr.best;
        color[fr.k] = 2;
        result = fr.best;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          if (result == kInfRounds)
            up.best = kInfRounds;
          else
            up.best = std::max(up.best, result + 1);
        }
        continue;
      }
      Vertex r_new = fr.moves[fr.next++];
      Vertex c = fr.c, p = fr.p;
      int32_t f_state = a.potential(fr.c, fr.r);
      if (!respond(c, p, r_new, f_state)) continue;  // captured: 0 rounds on
      int32_t f_after = a.potential(c, r_new);
      if (f_after >= 0) {
        enter_safe_phase(c, r_new, p);
        fr.best = std::max(fr.best, 1);
        continue;
      }
      size_t k2 = key(c, r_new, p);
      if (color[k2] == 1) {
        fr.best = kInfRounds;  // reachable negative cycle: robber survives
        continue;
      }
      if (color[k2] == 2) {
        if (score[k2] == kInfRounds)
          fr.best = kInfRounds;
        else
          fr.best = std::max(fr.best, score[k2] + 1);
        continue;
      }
      push(c, r_new, p);
    }
    return result;
  }

  // Breadth-first sweep of the reachable states with nonnegative potential,
  // checking that every robber step into the subgraph is immediately
  // capturable.  Cycles here are benign, so a visited set suffices.
  void enter_safe_phase(Vertex c0, Vertex r0, Vertex p0) {
    size_t k0 = key(c0, r0, p0);
    if (seen_safe[k0]) return;
    seen_safe[k0] = 1;
    std::vector<std::array<Vertex, 3>> queue{{c0, r0, p0}};
    std::vector<Vertex> moves;
    const auto& d = a.dist();
    size_t head = 0;
    while (head < queue.size()) {
      auto [c, r, p] = queue[head++];
      robber_moves(r, moves);
      for (Vertex r_new : moves) {
        if (a.in_h(r_new) && d(c, r_new) > 1) {
          out->post_safe = false;
          note_defect("breach: robber reaches subgraph vertex " +
                      std::to_string(r_new) + " outside N[" +
                      std::to_string(c) + "] after guarding");
          continue;
        }
        Vertex c2 = c, p2 = p;
        if (!respond(c2, p2, r_new, a.potential(c, r))) continue;
        if (a.potential(c2, r_new) < 0) continue;  // monotone defect, noted
        size_t k = key(c2, r_new, p2);
        if (seen_safe[k]) continue;
        seen_safe[k] = 1;
        queue.push_back({c2, r_new, p2});
      }
    }
  }

  // Greedy reconstruction of one longest line from a scored start state.
  std::vector<Vertex> reconstruct(Vertex c0, Vertex r0, Vertex p0,
                                  int32_t rounds) {
    std::vector<Vertex> line;
    Vertex c = c0, r = r0, p = p0;
    std::vector<Vertex> moves;
    int cap = (rounds == kInfRounds ? n * n + static_cast<int>(score.size())
                                    : rounds) + 2;
    for (int step = 0; step < cap; ++step) {
      int32_t f_state = a.potential(c, r);
      if (f_state >= 0) break;
      robber_moves(r, moves);
      Vertex pick = kNoVertex;
      int32_t pick_score = -1;
      Vertex pick_c = c, pick_p = p;
      for (Vertex r_new : moves) {
        Vertex c2 = c, p2 = p;
        if (!respond(c2, p2, r_new, f_state)) continue;
        int32_t sc;
        if (a.potential(c2, r_new) >= 0)
          sc = 1;
        else {
          size_t k = key(c2, r_new, p2);
          sc = color[k] == 2 && score[k] != kInfRounds ? score[k] + 1
               : color[k] == 2                         ? kInfRounds
                                                       : 1;
        }
        if (sc > pick_score) {
          pick_score = sc;
          pick = r_new;
          pick_c = c2;
          pick_p = p2;
        }
      }
      if (pick == kNoVertex) break;
      line.push_back(pick);
      c = pick_c;
      p = pick_p;
      r = pick;
    }
    return line;
  }
};

}  // namespace detail

inline GuardAudit audit_guard(const GuardArena& a, Forcing forcing,
                              std::optional<Vertex> cop_start = {}) {
  GuardAudit audit;
  Vertex c0 = cop_start.value_or(a.region().front());
  if (!a.in_region(c0))
    throw std::invalid_argument("audit_guard: cop start outside region");
  detail::AuditContext ctx(a, forcing, &audit);
  Vertex p0 = ctx.with_helper ? c0 : kNoVertex;

  for (Vertex r0 = 0; r0 < a.g().n(); ++r0) {
    if (r0 == c0 || (ctx.with_helper && r0 == p0)) continue;
    int32_t f0 = a.potential(c0, r0);
    if (f0 >= 0) {
      ctx.enter_safe_phase(c0, r0, p0);
      continue;
    }
    size_t k = ctx.key(c0, r0, p0);
    int32_t rounds = ctx.color[k] == 2 ? ctx.score[k]
                                       : ctx.negative_phase(c0, r0, p0);
    if (rounds == detail::AuditContext::kInfRounds) {
      audit.escaped = false;
      if (audit.defect.empty())
        audit.defect = "robber starting at " + std::to_string(r0) +
                       " keeps the potential negative forever";
      audit.worst_start = r0;
      audit.worst_moves = ctx.reconstruct(c0, r0, p0, rounds);
    } else if (audit.escaped && rounds > audit.max_rounds) {
      audit.max_rounds = rounds;
      audit.worst_start = r0;
      audit.worst_moves = ctx.reconstruct(c0, r0, p0, rounds);
    }
  }
  return audit;
}

}  // namespace cops
