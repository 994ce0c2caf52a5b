#pragma once

// DIMACS edge format: "c" comment lines, one "p edge <n> <m>" line,
// then "e <u> <v>" lines with 1-indexed endpoints.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lllcolor/graph.hpp"

namespace lllcolor {

class dimacs_error : public std::runtime_error {
 public:
  explicit dimacs_error(const std::string& what) : std::runtime_error(what) {}
};

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) throw dimacs_error("line " + std::to_string(lineno) + ": duplicate p line");
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        throw dimacs_error("line " + std::to_string(lineno) + ": malformed p line");
    } else if (tag == "e") {
      if (n == -1) throw dimacs_error("line " + std::to_string(lineno) + ": e line before p line");
      int u, v;
      if (!(ls >> u >> v))
        throw dimacs_error("line " + std::to_string(lineno) + ": malformed e line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw dimacs_error("line " + std::to_string(lineno) + ": vertex out of range");
      if (u == v)
        throw dimacs_error("line " + std::to_string(lineno) + ": self-loop");
      edges.push_back({u - 1, v - 1});
    } else {
      throw dimacs_error("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
  }
  if (n == -1) throw dimacs_error("missing p line");
  if (static_cast<long long>(edges.size()) != m)
    throw dimacs_error("edge count mismatch: p line says " + std::to_string(m) +
                       ", found " + std::to_string(edges.size()));
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw dimacs_error(e.what());  // duplicate edges etc.
  }
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace lllcolor
