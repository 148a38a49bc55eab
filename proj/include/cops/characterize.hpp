#pragma once
// Metric characterizations of guardable graph families.
//
// Three nested distance conditions are checked exhaustively:
//   (p1) four-point condition: among the three pairing sums
//        d(c,c')+d(x,y), d(c,x)+d(c',y), d(c,y)+d(c',x)
//        the two largest agree. Equivalent to being a block graph.
//   (p2) the restriction of (p1) to c' in N(c,x) with d(c,x) >= 2 and
//        d(c',y) >= 2, stated as a disjunction of two geodesic equalities.
//        Equivalent to being an extended block graph.
//   (p3) existential form over a dominating induced subgraph R: for every
//        c in R and far x some gate c' in N_R(c,x) satisfies the (p2)
//        disjunction against every far y. Equivalent to having a backbone
//        (see backbone.hpp).
//
// Checkers return the lexicographically first violation so failures are
// reproducible by re-evaluating the named tuple.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/distance.hpp"
#include "cops/graph.hpp"
#include "cops/structure.hpp"

namespace cops {

enum class Property { P1, P2, P3, BlockGraph, ExtendedBlockGraph, Backbone };

inline const char* property_name(Property p) {
  switch (p) {
    case Property::P1: return "p1";
    case Property::P2: return "p2";
    case Property::P3: return "p3";
    case Property::BlockGraph: return "block-graph";
    case Property::ExtendedBlockGraph: return "extended-block-graph";
    case Property::Backbone: return "backbone";
  }
  return "?";
}

struct Violation {
  Property property;
  std::vector<Vertex> vertices;  // witness tuple, checker-specific order
  std::string detail;            // the failed condition with distances filled in
};

namespace detail {
inline void require_connected(const Graph& g, const DistanceMatrix& d,
                              const char* who) {
  for (Vertex v = 1; v < g.n(); ++v)
    if (!d.reachable(0, v))
      throw std::invalid_argument(std::string(who) +
                                  ": graph must be connected");
}
}  // namespace detail

// Four-point condition over all ordered quadruples (c, c', x, y), repeats
// allowed. Returns the first violating quadruple in lexicographic order.
inline std::optional<Violation> check_p1(const Graph& g,
                                         const DistanceMatrix& d) {
  detail::require_connected(g, d, "check_p1");
  const int n = g.n();
  for (Vertex c = 0; c < n; ++c)
    for (Vertex cp = 0; cp < n; ++cp)
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
          int32_t s1 = d(c, cp) + d(x, y);
          int32_t s2 = d(c, x) + d(cp, y);
          int32_t s3 = d(c, y) + d(cp, x);
          int32_t hi = s1, mid = s2;
          if (hi < mid) std::swap(hi, mid);
          if (mid < s3) {
            mid = s3;
            if (hi < mid) std::swap(hi, mid);
          }
          if (hi != mid) {
            std::ostringstream msg;
            msg << "four-point sums (" << s1 << ", " << s2 << ", " << s3
                << ") at (c,c',x,y)=(" << c << "," << cp << "," << x << ","
                << y << "): largest two differ";
            return Violation{Property::P1, {c, cp, x, y}, msg.str()};
          }
        }
  return std::nullopt;
}

// Restricted condition: for all (c, x) with d(c,x) >= 2, every gate
// c' in N(c,x) and every y with d(c',y) >= 2,
//   d(c,y) == d(c,c') + d(c',y)  or  d(x,y) == d(x,c') + d(c',y).
// First violation in (c, x, c', y) lexicographic order.
inline std::optional<Violation> check_p2(const Graph& g,
                                         const DistanceMatrix& d) {
  detail::require_connected(g, d, "check_p2");
  const int n = g.n();
  for (Vertex c = 0; c < n; ++c)
    for (Vertex x = 0; x < n; ++x) {
      if (d(c, x) < 2) continue;
      const int32_t dcx = d(c, x);
      for (Vertex cp : g.neighbors(c)) {
        if (d(cp, x) + 1 != dcx) continue;
        for (Vertex y = 0; y < n; ++y) {
          const int32_t dcpy = d(cp, y);
          if (dcpy < 2) continue;
          if (d(c, y) == 1 + dcpy) continue;
          if (d(x, y) == d(x, cp) + dcpy) continue;
          std::ostringstream msg;
          msg << "at (c,x,c',y)=(" << c << "," << x << "," << cp << "," << y
              << "): d(c,y)=" << d(c, y) << " != 1+" << dcpy
              << " and d(x,y)=" << d(x, y) << " != " << d(x, cp) << "+"
              << dcpy;
          return Violation{Property::P2, {c, x, cp, y}, msg.str()};
        }
      }
    }
  return std::nullopt;
}

/// C(c, x): gates of c toward x that lie in R and dominate every gate of c
// toward x. Joints of the backbone construction arise as these sets.
// Requires c in R and d(c, x) >= 2.
inline std::vector<Vertex> compute_C(const Graph& g, const DistanceMatrix& d,
                                     const std::vector<Vertex>& r_set,
                                     Vertex c, Vertex x) {
  if (d(c, x) == DistanceMatrix::kUnreachable || d(c, x) < 2)
    throw std::invalid_argument("compute_C: d(c, x) must be >= 2 and finite");
  std::vector<char> in_r(static_cast<size_t>(g.n()), 0);
  bool c_in_r = false;
  for (Vertex v : r_set) {
    in_r[static_cast<size_t>(v)] = 1;
    if (v == c) c_in_r = true;
  }
  if (!c_in_r) throw std::invalid_argument("compute_C: c must belong to R");
  const int32_t dcx = d(c, x);
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(c)) {
    if (!in_r[static_cast<size_t>(u)] || d(u, x) + 1 != dcx) continue;
    bool dominates_all = true;
    for (Vertex v : g.neighbors(c)) {
      if (d(v, x) + 1 != dcx) continue;
      if (!g.dominates(u, v)) {
        dominates_all = false;
        break;
      }
    }
    if (dominates_all) out.push_back(u);
  }
  return out;
}

// Existential gate condition for a fixed candidate guard set R:
//   N[R] covers V, and for every c in R and x with d(c,x) >= 2 some
//   c' in N_R(c,x) satisfies the (p2) disjunction against every far y.
// R is given as a vertex subset of g.
inline std::optional<Violation> check_p3_with_R(
    const Graph& g, const DistanceMatrix& d,
    const std::vector<Vertex>& r_set) {
  detail::require_connected(g, d, "check_p3_with_R");
  if (r_set.empty())
    throw std::invalid_argument("check_p3_with_R: R must be nonempty");
  const int n = g.n();
  std::vector<char> in_r(static_cast<size_t>(n), 0);
  for (Vertex v : r_set) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("check_p3_with_R: R vertex out of range");
    in_r[static_cast<size_t>(v)] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    bool covered = in_r[static_cast<size_t>(v)] != 0;
    if (!covered)
      for (Vertex u : g.neighbors(v))
        if (in_r[static_cast<size_t>(u)]) {
          covered = true;
          break;
        }
    if (!covered)
      return Violation{Property::P3,
                       {v},
                       "vertex " + std::to_string(v) +
                           " is not dominated by R"};
  }
  // First y blocking gate cp for pair (c, x): d(cp, y) >= 2 and neither
  // d(c, y) = 1 + d(cp, y) nor d(x, y) = d(x, cp) + d(cp, y). Returns -1
  // when cp is admissible for every y.
  auto blocking_y = [&](Vertex c, Vertex cp, Vertex x) -> Vertex {
    for (Vertex y = 0; y < n; ++y) {
      const int32_t dcpy = d(cp, y);
      if (dcpy < 2) continue;
      if (d(c, y) == 1 + dcpy) continue;
      if (d(x, y) == d(x, cp) + dcpy) continue;
      return y;
    }
    return -1;
  };
  for (Vertex c = 0; c < n; ++c) {
    if (!in_r[static_cast<size_t>(c)]) continue;
    for (Vertex x = 0; x < n; ++x) {
      if (d(c, x) < 2) continue;
      const int32_t dcx = d(c, x);
      bool found = false;
      for (Vertex cp : g.neighbors(c)) {
        if (!in_r[static_cast<size_t>(cp)] || d(cp, x) + 1 != dcx) continue;
        if (blocking_y(c, cp, x) < 0) {
          found = true;
          break;
        }
      }
      if (!found) {
        std::ostringstream msg;
        msg << "no admissible gate in R for (c,x)=(" << c << "," << x << ");";
        for (Vertex cp : g.neighbors(c)) {
          if (!in_r[static_cast<size_t>(cp)] || d(cp, x) + 1 != dcx) continue;
          msg << " c'=" << cp << " blocked by y=" << blocking_y(c, cp, x)
              << ";";
        }
        return Violation{Property::P3, {c, x}, msg.str()};
      }
    }
  }
  return std::nullopt;
}

// A block graph has every biconnected component complete.
inline std::optional<Violation> is_block_graph(const Graph& g) {
  BlockDecomposition bd = blocks(g);
  for (const auto& blk : bd.blocks) {
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j)
        if (!g.has_edge(blk[i], blk[j])) {
          std::ostringstream msg;
          msg << "block {";
          for (size_t a = 0; a < blk.size(); ++a)
            msg << (a ? "," : "") << blk[a];
          msg << "} contains nonadjacent pair (" << blk[i] << "," << blk[j]
              << ")";
          return Violation{Property::BlockGraph, {blk[i], blk[j]}, msg.str()};
        }
  }
  return std::nullopt;
}

struct JointStructure {
  // Closed twin classes that contract onto cut vertices of the quotient.
  // For a plain block graph these are exactly the singleton cut vertices.
  std::vector<std::vector<Vertex>> joint_blocks;
  std::vector<Vertex> joints;  // union of joint blocks, ascending
};

struct ExtendedBlockResult {
  bool holds = false;
  JointStructure joints;
  std::optional<Violation> violation;
};

// Recognizer: contract every closed twin class to one vertex and test the
// quotient for being a block graph. Blowing a vertex of a block graph up
// into a clique and contracting it back are inverse to each other, and
// blow-ups at non-cut vertices stay block graphs, so this accepts exactly
// the graphs obtainable from a block graph by expanding cut vertices into
// cliques. Cross-validated against check_p2 in the test suite.
inline ExtendedBlockResult is_extended_block_graph(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument(
        "is_extended_block_graph: graph must be connected");
  ExtendedBlockResult res;
  auto classes = closed_twin_classes(g);
  const int q = static_cast<int>(classes.size());
  std::vector<int> cls(static_cast<size_t>(g.n()), -1);
  for (int i = 0; i < q; ++i)
    for (Vertex v : classes[static_cast<size_t>(i)])
      cls[static_cast<size_t>(v)] = i;
  Graph quotient(q);
  for (int i = 0; i < q; ++i) {
    Vertex rep = classes[static_cast<size_t>(i)].front();
    for (Vertex w : g.neighbors(rep)) {
      int j = cls[static_cast<size_t>(w)];
      if (j > i && !quotient.has_edge(i, j)) quotient.add_edge(i, j);
    }
  }
  if (auto viol = is_block_graph(quotient)) {
    Vertex u = classes[static_cast<size_t>(viol->vertices[0])].front();
    Vertex v = classes[static_cast<size_t>(viol->vertices[1])].front();
    res.violation =
        Violation{Property::ExtendedBlockGraph,
                  {u, v},
                  "twin-quotient is not a block graph: class representatives "
                  "(" + std::to_string(u) + "," + std::to_string(v) +
                      ") lie nonadjacent in a common quotient block"};
    return res;
  }
  res.holds = true;
  BlockDecomposition bd = blocks(quotient);
  std::vector<char> is_cut(static_cast<size_t>(q), 0);
  for (Vertex c : bd.cut_vertices) is_cut[static_cast<size_t>(c)] = 1;
  for (int i = 0; i < q; ++i)
    if (is_cut[static_cast<size_t>(i)]) {
      res.joints.joint_blocks.push_back(classes[static_cast<size_t>(i)]);
      for (Vertex v : classes[static_cast<size_t>(i)])
        res.joints.joints.push_back(v);
    }
  std::sort(res.joints.joints.begin(), res.joints.joints.end());
  return res;
}

}  // namespace cops
