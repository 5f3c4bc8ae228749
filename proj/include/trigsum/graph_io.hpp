#pragma once

// Plain-text edge lists:
//
//   # comment
//   nodes 4
//   0 1
//   1 2
//
// Node ids are 0-based; blank lines and text after '#' are ignored.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "trigsum/error.hpp"
#include "trigsum/resistor.hpp"

namespace trigsum {

inline UnitGraph parse_edge_list(std::istream &in) {
  UnitGraph g;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  const auto bad = [&](const std::string &why) {
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first))
      continue;
    std::string extra;
    if (!have_header) {
      std::int64_t count = 0;
      if (first != "nodes" || !(fields >> count) || count < 1 || (fields >> extra))
        bad("expected 'nodes <count>' before any edge");
      g.node_count = count;
      have_header = true;
      continue;
    }
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::istringstream pair(line);
    if (!(pair >> u >> v) || (pair >> extra))
      bad("expected 'u v'");
    if (u < 0 || v < 0 || u >= g.node_count || v >= g.node_count)
      bad("node id outside [0, " + std::to_string(g.node_count) + ")");
    if (u == v)
      bad("self-loop at node " + std::to_string(u));
    g.edges.emplace_back(u, v);
  }
  if (!have_header)
    fail(errc::parse_error, "missing 'nodes <count>' line");
  return g;
}

inline UnitGraph read_edge_list(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(errc::parse_error, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

inline std::string format_edge_list(const UnitGraph &g) {
  std::ostringstream out;
  out << "nodes " << g.node_count << '\n';
  for (const auto &[u, v] : g.edges)
    out << u << ' ' << v << '\n';
  return out.str();
}

} // namespace trigsum
