#pragma once
// Plain-text graph exchange format:
//   # comment
//   p <n> <m>
//   e <u> <v>        (0-based, one per line, m lines)
// Layered-construction side files map vertex ids to (layer, index) pairs:
//   v <id> <layer> <index>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cops/graph.hpp"

namespace cops {

inline void write_graph(std::ostream& os, const Graph& g) {
  os << "p " << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline Graph read_graph(std::istream& is) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("read_graph: line " + std::to_string(lineno) +
                                ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    char tag = 0;
    ls >> tag;
    if (tag == 'p') {
      if (n >= 0) fail("repeated header");
      if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed header");
    } else if (tag == 'e') {
      if (n < 0) fail("edge before header");
      Vertex u, v;
      if (!(ls >> u >> v)) fail("malformed edge");
      edges.emplace_back(u, v);
    } else {
      fail(std::string("unknown record '") + tag + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("read_graph: missing 'p' header");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument(
        "read_graph: header declares " + std::to_string(m) + " edges, found " +
        std::to_string(edges.size()));
  return build_graph(n, edges);
}

inline Graph graph_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

struct LayerCoord {
  int layer = -1;
  int index = -1;
};

inline void write_layer_coords(std::ostream& os,
                               const std::vector<LayerCoord>& coords) {
  for (size_t id = 0; id < coords.size(); ++id)
    os << "v " << id << ' ' << coords[id].layer << ' ' << coords[id].index
       << '\n';
}

inline std::vector<LayerCoord> read_layer_coords(std::istream& is) {
  std::vector<LayerCoord> coords;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    char tag = 0;
    int id, layer, index;
    if (!(ls >> tag >> id >> layer >> index) || tag != 'v')
      throw std::invalid_argument("read_layer_coords: line " +
                                  std::to_string(lineno) + ": malformed");
    if (id != static_cast<int>(coords.size()))
      throw std::invalid_argument("read_layer_coords: line " +
                                  std::to_string(lineno) +
                                  ": ids must be consecutive from 0");
    coords.push_back({layer, index});
  }
  return coords;
}

}  // namespace cops
