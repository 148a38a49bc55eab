#pragma once
// Exact solver for the k-cop pursuit game.  Cop configurations are sorted
// multisets (identical cops are interchangeable) ranked by the colex index of
// the strictly increasing transform d_i = c_i + i, so the full state space is
// C(n+k-1, k) * n * 2.  Labels come from a backward attractor seeded at the
// capture states; the one-turn relation on configurations is symmetric
// (reverse each cop's step), which lets the attractor enumerate predecessors
// with the same product loop used for successors.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/graph.hpp"

namespace cops {

enum class GameTurn : uint8_t { CopMove = 0, RobberMove = 1 };

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(uint64_t states, uint64_t budget)
      : std::runtime_error("solve_k_cops: state space of " +
                           std::to_string(states) +
                           " states exceeds the budget of " +
                           std::to_string(budget)),
        states_(states) {}
  uint64_t states() const { return states_; }

 private:
  uint64_t states_;
};

// Complete solution of the k-cop game on one graph: per-state winner and, for
// cop-to-move states the cops win, the configuration they should move to.
class GameTable {
 public:
  int k() const { return k_; }
  int n() const { return n_; }
  uint64_t state_count() const { return static_cast<uint64_t>(label_.size()); }

  // True when some initial cop configuration beats every robber placement.
  bool cop_player_wins() const { return winning_rank_ >= 0; }

  // Lexicographically first winning initial configuration, if any.
  std::optional<std::vector<Vertex>> winning_placement() const {
    if (winning_rank_ < 0) return std::nullopt;
    return config(static_cast<size_t>(winning_rank_));
  }

  bool cop_wins(std::vector<Vertex> cops, Vertex r, GameTurn turn) const {
    return label_[state(rank_of(std::move(cops)), r, turn)] != 0;
  }

  // The cops' labeled move from a winning cop-to-move state; empty when the
  // state is already a capture (no move needed) or not cop-win.
  std::optional<std::vector<Vertex>> policy_move(std::vector<Vertex> cops,
                                                 Vertex r) const {
    size_t s = state(rank_of(std::move(cops)), r, GameTurn::CopMove);
    if (!label_[s] || policy_[s / 2] < 0) return std::nullopt;
    return config(static_cast<size_t>(policy_[s / 2]));
  }

  std::vector<Vertex> config(size_t rank) const {
    std::vector<Vertex> out(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i)
      out[static_cast<size_t>(i)] =
          configs_[rank * static_cast<size_t>(k_) + static_cast<size_t>(i)];
    return out;
  }

 private:
  friend GameTable solve_k_cops(const Graph&, int, uint64_t);

  size_t rank_of(std::vector<Vertex> cops) const {
    if (static_cast<int>(cops.size()) != k_)
      throw std::invalid_argument("GameTable: expected " + std::to_string(k_) +
                                  " cop positions");
    std::sort(cops.begin(), cops.end());
    if (cops.front() < 0 || cops.back() >= n_)
      throw std::invalid_argument("GameTable: cop vertex out of range");
    uint64_t r = 0;
    for (int i = 0; i < k_; ++i)
      r += binom_[static_cast<size_t>(cops[static_cast<size_t>(i)] + i) *
                      static_cast<size_t>(k_ + 1) +
                  static_cast<size_t>(i + 1)];
    return static_cast<size_t>(r);
  }

  size_t state(size_t rank, Vertex r, GameTurn turn) const {
    if (r < 0 || r >= n_)
      throw std::invalid_argument("GameTable: robber vertex out of range");
    return (rank * static_cast<size_t>(n_) + static_cast<size_t>(r)) * 2 +
           static_cast<size_t>(turn);
  }

  int k_ = 0;
  int n_ = 0;
  int64_t winning_rank_ = -1;
  std::vector<Vertex> configs_;   // k vertices per rank
  std::vector<uint64_t> binom_;   // C(x, j) flattened, j <= k
  std::vector<char> label_;       // 1 = cop-win
  std::vector<int32_t> policy_;   // per cop-to-move state: destination rank
};

// Exact backward-induction solution of the k-cop game on a connected graph.
// Cops are placed first, the robber answers, and the cops move first; each
// side may pass; capture is co-location after either half-turn.
inline GameTable solve_k_cops(const Graph& g, int k,
                              uint64_t budget = 50'000'000) {
  if (!is_connected(g))
    throw std::invalid_argument("solve_k_cops: graph must be connected");
  if (k < 1) throw std::invalid_argument("solve_k_cops: k must be >= 1");
  const int n = g.n();

  GameTable t;
  t.k_ = k;
  t.n_ = n;
  t.binom_.assign(static_cast<size_t>(n + k + 1) * static_cast<size_t>(k + 1),
                  0);
  auto binom_at = [&](int x, int j) -> uint64_t& {
    return t.binom_[static_cast<size_t>(x) * static_cast<size_t>(k + 1) +
                    static_cast<size_t>(j)];
  };
  constexpr uint64_t kSat = 1'000'000'000'000'000'000ULL;
  for (int x = 0; x <= n + k; ++x) {
    binom_at(x, 0) = 1;
    for (int j = 1; j <= k && j <= x; ++j) {
      uint64_t a = binom_at(x - 1, j - 1);
      uint64_t b = j <= x - 1 ? binom_at(x - 1, j) : 0;
      binom_at(x, j) = a > kSat - b ? kSat : a + b;
    }
  }
  const uint64_t nconfigs = binom_at(n + k - 1, k);
  const uint64_t nstates = nconfigs * static_cast<uint64_t>(n) * 2;
  if (nstates > budget) throw BudgetExceeded(nstates, budget);

  // All sorted multisets, written at their colex rank.
  t.configs_.assign(static_cast<size_t>(nconfigs) * static_cast<size_t>(k), 0);
  {
    std::vector<Vertex> cur(static_cast<size_t>(k), 0);
    while (true) {
      uint64_t r = 0;
      for (int i = 0; i < k; ++i)
        r += binom_at(cur[static_cast<size_t>(i)] + i, i + 1);
      for (int i = 0; i < k; ++i)
        t.configs_[static_cast<size_t>(r) * static_cast<size_t>(k) +
                   static_cast<size_t>(i)] = cur[static_cast<size_t>(i)];
      int i = k - 1;
      while (i >= 0 && cur[static_cast<size_t>(i)] == n - 1) --i;
      if (i < 0) break;
      Vertex v = ++cur[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = v;
    }
  }

  t.label_.assign(static_cast<size_t>(nstates), 0);
  t.policy_.assign(static_cast<size_t>(nstates / 2), -1);
  std::vector<int32_t> cnt(static_cast<size_t>(nstates / 2), 0);
  for (Vertex r = 0; r < n; ++r) {
    int32_t moves = static_cast<int32_t>(g.neighbors(r).size()) + 1;
    for (uint64_t c = 0; c < nconfigs; ++c)
      cnt[static_cast<size_t>(c) * static_cast<size_t>(n) +
          static_cast<size_t>(r)] = moves;
  }

  auto state_id = [n](uint64_t rank, Vertex r, int turn) -> size_t {
    return (static_cast<size_t>(rank) * static_cast<size_t>(n) +
            static_cast<size_t>(r)) *
               2 +
           static_cast<size_t>(turn);
  };
  auto rank_of_sorted = [&](const Vertex* c) -> uint64_t {
    uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += binom_at(c[i] + i, i + 1);
    return r;
  };

  std::vector<size_t> queue;
  queue.reserve(1024);
  auto mark = [&](size_t s, int32_t pol) {
    if (t.label_[s]) return;
    t.label_[s] = 1;
    if ((s & 1) == 0) t.policy_[s / 2] = pol;
    queue.push_back(s);
  };

  // Capture seeds: the robber shares a vertex with some cop.
  for (uint64_t c = 0; c < nconfigs; ++c)
    for (int i = 0; i < k; ++i) {
      Vertex v = t.configs_[static_cast<size_t>(c) * static_cast<size_t>(k) +
                            static_cast<size_t>(i)];
      mark(state_id(c, v, 0), -1);
      mark(state_id(c, v, 1), -1);
    }

  // Backward attractor.  Predecessor configurations of a cop-move step are
  // exactly the one-step images of the current configuration, because every
  // cop step is reversible.
  std::vector<Vertex> cand(static_cast<size_t>(k));
  std::vector<Vertex> sorted_cand(static_cast<size_t>(k));
  for (size_t head = 0; head < queue.size(); ++head) {
    size_t s = queue[head];
    uint64_t rank = s / 2 / static_cast<size_t>(n);
    Vertex r = static_cast<Vertex>((s / 2) % static_cast<size_t>(n));
    if ((s & 1) == 0) {
      // A cop-to-move state fell: the robber-to-move predecessors (same
      // configuration, robber parked or one step away) lose one escape.
      size_t base = static_cast<size_t>(rank) * static_cast<size_t>(n);
      auto credit = [&](Vertex rp) {
        size_t ps = (base + static_cast<size_t>(rp)) * 2 + 1;
        if (!t.label_[ps] && --cnt[ps / 2] == 0) mark(ps, -1);
      };
      credit(r);
      for (Vertex rp : g.neighbors(r)) credit(rp);
    } else {
      // A robber-to-move state fell: every cop-to-move state one cop-turn
      // away can enter it, so all of them win by moving here.
      const Vertex* conf =
          &t.configs_[static_cast<size_t>(rank) * static_cast<size_t>(k)];
      int32_t pol = static_cast<int32_t>(rank);
      auto recurse = [&](auto&& self, int i) -> void {
        if (i == k) {
          std::copy(cand.begin(), cand.end(), sorted_cand.begin());
          std::sort(sorted_cand.begin(), sorted_cand.end());
          mark(state_id(rank_of_sorted(sorted_cand.data()), r, 0), pol);
          return;
        }
        cand[static_cast<size_t>(i)] = conf[i];
        self(self, i + 1);
        for (Vertex w : g.neighbors(conf[i])) {
          cand[static_cast<size_t>(i)] = w;
          self(self, i + 1);
        }
      };
      recurse(recurse, 0);
    }
  }

  for (uint64_t c = 0; c < nconfigs && t.winning_rank_ < 0; ++c) {
    bool all = true;
    for (Vertex r = 0; r < n; ++r)
      if (!t.label_[state_id(c, r, 0)]) {
        all = false;
        break;
      }
    if (all) t.winning_rank_ = static_cast<int64_t>(c);
  }
  return t;
}

// Smallest k <= k_max whose game the cops win, or nullopt when even k_max
// cops lose.
inline std::optional<int> cop_number(const Graph& g, int k_max = 3,
                                     uint64_t budget = 50'000'000) {
  for (int k = 1; k <= k_max; ++k)
    if (solve_k_cops(g, k, budget).cop_player_wins()) return k;
  return std::nullopt;
}

}  // namespace cops
