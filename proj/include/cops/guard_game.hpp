#pragma once
// Exact solver for the guarding game on (G, H, cop region).  States are
// (cop, robber, side to move); the robber commits a breach whenever its move
// ends on a subgraph vertex outside N[cop], and moving onto a subgraph vertex
// inside N[cop] loses it the game outright.  The cop wins iff it can keep the
// number of breaches finite, so the robber's objective is the Buchi condition
// "visit breach states infinitely often" and the game is solved by the
// classical recurrence-set fixpoint over robber attractors.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/graph.hpp"
#include "cops/subgraph.hpp"

namespace cops {

enum class GuardWinner : uint8_t { Cop, Robber };
enum class GuardTurn : uint8_t { RobberMove = 0, CopMove = 1 };

class GuardGameResult {
 public:
  GuardWinner winner() const { return winner_; }
  // Lexicographically smallest winning cop placement, when the cop wins.
  std::optional<Vertex> cop_start() const { return cop_start_; }

  bool cop_wins_from(Vertex c, Vertex r, GuardTurn turn) const {
    return !robber_win_[index(c, r, turn)];
  }

  // The robber's move from a robber-win state with the robber to move;
  // following it forces breaches forever.  Empty elsewhere.
  std::optional<Vertex> robber_reply(Vertex c, Vertex r) const {
    Vertex v = choice_[index(c, r, GuardTurn::RobberMove) / 2];
    if (v < 0) return std::nullopt;
    return v;
  }

  bool is_breach(Vertex c, Vertex r) const {
    return in_h(r) && !host_->dominates_pair(c, r);
  }

 private:
  friend GuardGameResult solve_guard_game(const Graph&, std::vector<Vertex>,
                                          std::vector<Vertex>);

  size_t index(Vertex c, Vertex r, GuardTurn turn) const {
    int ci = c >= 0 && c < host_->n() ? region_pos_[static_cast<size_t>(c)]
                                      : -1;
    if (ci < 0 || r < 0 || r >= host_->n())
      throw std::invalid_argument("GuardGameResult: state out of range");
    return (static_cast<size_t>(ci) * static_cast<size_t>(host_->n()) +
            static_cast<size_t>(r)) *
               2 +
           static_cast<size_t>(turn);
  }

  bool in_h(Vertex v) const {
    return v >= 0 && v < host_->n() && in_h_[static_cast<size_t>(v)] != 0;
  }

  struct HostFacts {
    int n_ = 0;
    std::vector<std::vector<Vertex>> closed_nbrs_;
    int n() const { return n_; }
    bool dominates_pair(Vertex c, Vertex r) const {
      const auto& row = closed_nbrs_[static_cast<size_t>(c)];
      return std::binary_search(row.begin(), row.end(), r);
    }
  };

  GuardWinner winner_ = GuardWinner::Robber;
  std::optional<Vertex> cop_start_;
  std::vector<char> robber_win_;
  std::vector<Vertex> choice_;
  std::vector<int> region_pos_;
  std::vector<char> in_h_;
  std::shared_ptr<HostFacts> host_;
};

// Decides whether one cop confined to cop_region can guard H inside g.  The
// cop picks its placement first, the robber answers with any vertex, and the
// robber moves first thereafter.  H must be isometric in g: otherwise some
// vertex pair is joined faster outside H and no single cop can ever guard.
inline GuardGameResult solve_guard_game(const Graph& g,
                                        std::vector<Vertex> h_vertices,
                                        std::vector<Vertex> cop_region) {
  SubgraphView view(g, std::move(h_vertices));
  auto iso = is_isometric(g, all_pairs_distances(g), view);
  if (!iso.isometric)
    throw std::invalid_argument(
        "solve_guard_game: subgraph is not isometric in the host (vertices " +
        std::to_string(iso.u) + " and " + std::to_string(iso.v) + ")");
  std::sort(cop_region.begin(), cop_region.end());
  if (cop_region.empty())
    throw std::invalid_argument("solve_guard_game: cop region is empty");
  if (std::adjacent_find(cop_region.begin(), cop_region.end()) !=
      cop_region.end())
    throw std::invalid_argument(
        "solve_guard_game: duplicate vertex in cop region");
  for (Vertex v : cop_region)
    if (!view.contains(v))
      throw std::invalid_argument("solve_guard_game: cop region vertex " +
                                  std::to_string(v) +
                                  " lies outside the subgraph");

  const int n = g.n();
  const int m = static_cast<int>(cop_region.size());
  GuardGameResult res;
  res.host_ = std::make_shared<GuardGameResult::HostFacts>();
  res.host_->n_ = n;
  res.host_->closed_nbrs_.resize(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& row = res.host_->closed_nbrs_[static_cast<size_t>(v)];
    row = g.neighbors(v);
    row.push_back(v);
    std::sort(row.begin(), row.end());
  }
  res.in_h_.assign(static_cast<size_t>(n), 0);
  for (Vertex v : view.vertices()) res.in_h_[static_cast<size_t>(v)] = 1;
  res.region_pos_.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < m; ++i)
    res.region_pos_[static_cast<size_t>(cop_region[static_cast<size_t>(i)])] =
        i;

  // State layout: ((ci * n) + r) * 2 + turn.
  const size_t states = static_cast<size_t>(m) * static_cast<size_t>(n) * 2;
  auto idx = [n](int ci, Vertex r, int turn) {
    return (static_cast<size_t>(ci) * static_cast<size_t>(n) +
            static_cast<size_t>(r)) *
               2 +
           static_cast<size_t>(turn);
  };

  auto loses_at = [&](int ci, Vertex dest) {
    // Robber landing on a subgraph vertex next to the cop is captured.
    return res.in_h_[static_cast<size_t>(dest)] != 0 &&
           res.host_->dominates_pair(cop_region[static_cast<size_t>(ci)],
                                     dest);
  };

  std::vector<std::vector<int32_t>> succ(states);
  std::vector<char> breach(states, 0);
  for (int ci = 0; ci < m; ++ci) {
    Vertex c = cop_region[static_cast<size_t>(ci)];
    for (Vertex r = 0; r < n; ++r) {
      size_t srob = idx(ci, r, 0), scop = idx(ci, r, 1);
      if (res.in_h_[static_cast<size_t>(r)] != 0 &&
          !res.host_->dominates_pair(c, r))
        breach[scop] = 1;
      auto& rob_succ = succ[srob];
      if (!loses_at(ci, r)) rob_succ.push_back(static_cast<int32_t>(scop));
      for (Vertex w : g.neighbors(r))
        if (!loses_at(ci, w))
          rob_succ.push_back(static_cast<int32_t>(idx(ci, w, 1)));
      auto& cop_succ = succ[scop];
      cop_succ.push_back(static_cast<int32_t>(srob));
      for (Vertex w : g.neighbors(c)) {
        int wi = res.region_pos_[static_cast<size_t>(w)];
        if (wi >= 0) cop_succ.push_back(static_cast<int32_t>(idx(wi, r, 0)));
      }
    }
  }
  std::vector<std::vector<int32_t>> pred(states);
  for (size_t s = 0; s < states; ++s)
    for (int32_t t : succ[s]) pred[static_cast<size_t>(t)].push_back(
        static_cast<int32_t>(s));
  auto is_robber_turn = [](size_t s) { return (s & 1) == 0; };

  // Robber attractor of target, with a move choice recorded for robber-turn
  // states pulled in through an edge.
  std::vector<char> attr(states);
  std::vector<int32_t> cnt(states);
  std::vector<int32_t> attr_choice(states);
  auto attractor = [&](const std::vector<char>& target) {
    std::fill(attr.begin(), attr.end(), 0);
    std::fill(attr_choice.begin(), attr_choice.end(), -1);
    for (size_t s = 0; s < states; ++s)
      cnt[s] = static_cast<int32_t>(succ[s].size());
    std::vector<int32_t> queue;
    for (size_t s = 0; s < states; ++s)
      if (target[s]) {
        attr[s] = 1;
        queue.push_back(static_cast<int32_t>(s));
      }
    for (size_t head = 0; head < queue.size(); ++head) {
      size_t s = static_cast<size_t>(queue[head]);
      for (int32_t pi : pred[s]) {
        size_t p = static_cast<size_t>(pi);
        if (attr[p]) continue;
        if (is_robber_turn(p)) {
          attr[p] = 1;
          attr_choice[p] = static_cast<int32_t>(s);
          queue.push_back(pi);
        } else if (--cnt[p] == 0) {
          attr[p] = 1;
          queue.push_back(pi);
        }
      }
    }
  };

  // Recurrence set: breach states from which the robber can force another
  // breach visit in at least one step, iterated to a fixpoint.
  std::vector<char> recur = breach;
  while (true) {
    attractor(recur);
    std::vector<char> next(states, 0);
    bool changed = false;
    for (size_t s = 0; s < states; ++s) {
      if (!recur[s]) continue;
      bool stays;
      if (is_robber_turn(s)) {
        stays = false;
        for (int32_t t : succ[s])
          if (attr[static_cast<size_t>(t)]) {
            stays = true;
            break;
          }
      } else {
        stays = true;
        for (int32_t t : succ[s])
          if (!attr[static_cast<size_t>(t)]) {
            stays = false;
            break;
          }
      }
      next[s] = stays ? 1 : 0;
      if (!stays) changed = true;
    }
    recur.swap(next);
    if (!changed) break;
  }
  attractor(recur);

  res.robber_win_.assign(states, 0);
  for (size_t s = 0; s < states; ++s) res.robber_win_[s] = attr[s];
  res.choice_.assign(states / 2, Vertex{-1});
  for (size_t s = 0; s < states; s += 2)
    if (attr[s] && attr_choice[s] >= 0) {
      size_t t = static_cast<size_t>(attr_choice[s]);
      res.choice_[s / 2] = static_cast<Vertex>((t / 2) %
                                               static_cast<size_t>(n));
    } else if (attr[s]) {
      // States inside the recurrence core keep any successor that remains in
      // the robber's winning set.
      for (int32_t t : succ[s])
        if (attr[static_cast<size_t>(t)]) {
          res.choice_[s / 2] = static_cast<Vertex>(
              (static_cast<size_t>(t) / 2) % static_cast<size_t>(n));
          break;
        }
    }

  res.winner_ = GuardWinner::Robber;
  for (int ci = 0; ci < m && res.winner_ == GuardWinner::Robber; ++ci) {
    Vertex c = cop_region[static_cast<size_t>(ci)];
    bool all = true;
    for (Vertex r = 0; r < n; ++r) {
      if (r == c) continue;
      if (attr[idx(ci, r, 0)]) {
        all = false;
        break;
      }
    }
    if (all) {
      res.winner_ = GuardWinner::Cop;
      res.cop_start_ = c;
    }
  }
  return res;
}

}  // namespace cops
