#pragma once
// Exhaustive enumeration of labeled graphs on few vertices by edge-subset
// bitmask. Deliberately not a canonical-form enumerator: isomorphic graphs
// recur once per labeling, which is what the exhaustive property sweeps
// want (they quantify over labeled inputs).

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cops/graph.hpp"

namespace cops {

// Edge bit order: (0,1),(0,2),...,(0,n-1),(1,2),... so bit e of the mask
// selects the e-th pair in lexicographic order.
inline std::vector<Edge> edge_slots(int n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

// Invokes fn(graph) for every connected labeled graph on n vertices, in
// ascending edge-mask order. Connectivity is pre-filtered on bit-parallel
// adjacency rows so Graph construction only happens for survivors.
template <typename F>
void for_each_connected_graph(int n, F&& fn) {
  if (n < 1 || n > 8)
    throw std::invalid_argument(
        "for_each_connected_graph: supported range is 1 <= n <= 8");
  const std::vector<Edge> slots = edge_slots(n);
  const int m = static_cast<int>(slots.size());
  const uint64_t full_vertices = (uint64_t{1} << n) - 1;
  std::vector<Edge> picked;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    uint64_t rows[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (int e = 0; e < m; ++e)
      if (mask & (uint64_t{1} << e)) {
        rows[slots[static_cast<size_t>(e)].first] |=
            uint64_t{1} << slots[static_cast<size_t>(e)].second;
        rows[slots[static_cast<size_t>(e)].second] |=
            uint64_t{1} << slots[static_cast<size_t>(e)].first;
      }
    uint64_t reach = 1;
    for (;;) {
      uint64_t next = reach;
      for (int v = 0; v < n; ++v)
        if (reach & (uint64_t{1} << v)) next |= rows[v];
      if (next == reach) break;
      reach = next;
    }
    if (reach != full_vertices) continue;
    picked.clear();
    for (int e = 0; e < m; ++e)
      if (mask & (uint64_t{1} << e)) picked.push_back(slots[static_cast<size_t>(e)]);
    fn(build_graph(n, picked));
  }
}

inline uint64_t count_connected_graphs(int n) {
  uint64_t count = 0;
  for_each_connected_graph(n, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace cops
