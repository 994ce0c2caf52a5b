#pragma once

// Independent validators for every coloring property, plus a brute-force
// chromatic oracle for tiny instances. Acyclicity is checked per realized
// color pair with a linear cycle search (complete, no cycle enumeration);
// the one exception is the properly-bichromatic check of the eta stage,
// which walks the (capped) cycle list because that stage is not proper.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lllcolor/graph.hpp"

namespace lllcolor {

enum class ColoringTarget { edges, vertices };

struct Coloring {
  ColoringTarget target = ColoringTarget::edges;
  std::vector<int> assignment;  // color index per edge/vertex, in index order
  long long palette = 0;        // N
};

struct Violation {
  std::string kind;
  std::vector<int> scope;  // edge or vertex indices
  std::string description;
};

enum class VerifyVariant {
  proper_edge,
  acyclic_edge,
  proper_vertex,
  acyclic_vertex,
  star,
  frugal,
  eta_stage,
};

inline std::string to_string(VerifyVariant v) {
  switch (v) {
    case VerifyVariant::proper_edge: return "proper-edge";
    case VerifyVariant::acyclic_edge: return "acyclic-edge";
    case VerifyVariant::proper_vertex: return "proper-vertex";
    case VerifyVariant::acyclic_vertex: return "acyclic-vertex";
    case VerifyVariant::star: return "star";
    case VerifyVariant::frugal: return "frugal";
    case VerifyVariant::eta_stage: return "eta-stage";
  }
  return "?";
}

inline std::optional<VerifyVariant> verify_variant_from_string(const std::string& s) {
  for (auto v : {VerifyVariant::proper_edge, VerifyVariant::acyclic_edge,
                 VerifyVariant::proper_vertex, VerifyVariant::acyclic_vertex,
                 VerifyVariant::star, VerifyVariant::frugal, VerifyVariant::eta_stage})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

namespace detail {

inline std::string scope_string(const std::vector<int>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

template <typename T>
void keep_min(std::optional<T>& best, T cand) {
  if (!best || cand < *best) best = std::move(cand);
}

// Improper adjacent-edge pair with lexicographically smallest edge scope.
inline std::optional<Violation> improper_edge_pair(const Graph& g, const std::vector<int>& col) {
  std::optional<std::vector<int>> best;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (col[inc[i]] == col[inc[j]]) {
          std::vector<int> s{std::min(inc[i], inc[j]), std::max(inc[i], inc[j])};
          keep_min(best, s);
        }
  }
  if (!best) return std::nullopt;
  return Violation{"ImproperPair", *best, "adjacent edges share a color"};
}

inline std::optional<Violation> improper_vertex_pair(const Graph& g, const std::vector<int>& col) {
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (col[u] == col[v])
      return Violation{"ImproperPair", {u, v}, "adjacent vertices share a color"};
  }
  return std::nullopt;
}

// In a properly edge-colored graph, the subgraph on two color classes has
// max degree 2, so its cyclic components are exactly the bichromatic
// cycles. Returns the (shortest, then lexicographically smallest) one.
inline std::optional<std::vector<int>> bichromatic_edge_cycle(const Graph& g,
                                                              const std::vector<int>& col) {
  std::map<int, std::vector<int>> by_color;
  for (int e = 0; e < g.edge_count(); ++e) by_color[col[e]].push_back(e);
  std::optional<std::pair<std::size_t, std::vector<int>>> best;
  std::vector<int> deg(g.vertex_count());
  std::vector<int> mark(g.vertex_count(), -1);
  int stamp = 0;
  for (auto ia = by_color.begin(); ia != by_color.end(); ++ia) {
    for (auto ib = std::next(ia); ib != by_color.end(); ++ib) {
      ++stamp;
      std::vector<int> sub = ia->second;
      sub.insert(sub.end(), ib->second.begin(), ib->second.end());
      // count degrees within the 2-color subgraph
      for (int e : sub) {
        auto [u, v] = g.edge(e);
        if (mark[u] != stamp) { mark[u] = stamp; deg[u] = 0; }
        if (mark[v] != stamp) { mark[v] = stamp; deg[v] = 0; }
        ++deg[u];
        ++deg[v];
      }
      // components in which every vertex has degree 2 are cycles
      std::set<int> unused(sub.begin(), sub.end());
      while (!unused.empty()) {
        int start = *unused.begin();
        std::vector<int> comp;
        std::vector<int> frontier{start};
        unused.erase(start);
        bool cyclic = true;
        std::map<int, std::vector<int>> vert_edges;
        for (int e : sub) {
          vert_edges[g.edge(e).first].push_back(e);
          vert_edges[g.edge(e).second].push_back(e);
        }
        while (!frontier.empty()) {
          int e = frontier.back();
          frontier.pop_back();
          comp.push_back(e);
          for (int x : {g.edge(e).first, g.edge(e).second}) {
            if (deg[x] != 2) cyclic = false;
            for (int f : vert_edges[x])
              if (unused.erase(f)) frontier.push_back(f);
          }
        }
        if (cyclic) {
          std::sort(comp.begin(), comp.end());
          keep_min(best, {comp.size(), comp});
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return best->second;
}

// Any cycle in the subgraph induced by the given vertex set (DFS back
// edge); returns its vertex set, or nullopt.
inline std::optional<std::vector<int>> induced_cycle(const Graph& g,
                                                     const std::vector<char>& in_set) {
  const int n = g.vertex_count();
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (!in_set[root] || state[root] != 0) continue;
    // recursive DFS, depth bounded by n
    std::optional<std::vector<int>> found;
    auto dfs = [&](auto&& self, int u) -> void {
      if (found) return;
      state[u] = 1;
      for (int w : g.neighbors(u)) {
        if (!in_set[w] || w == parent[u] || found) continue;
        if (state[w] == 1) {
          std::vector<int> cyc{w};
          for (int x = u; x != w; x = parent[x]) cyc.push_back(x);
          std::sort(cyc.begin(), cyc.end());
          found = cyc;
          return;
        }
        if (state[w] == 0) {
          parent[w] = u;
          self(self, w);
        }
      }
      state[u] = 2;
    };
    dfs(dfs, root);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace detail

struct VerifyParams {
  int eta = 2;
  int beta = 2;
  std::size_t cycle_cap = kDefaultEnumerationCap;
};

inline std::optional<Violation> verify(const Graph& g, const Coloring& c,
                                       VerifyVariant variant, VerifyParams params = {}) {
  const bool edge_target = variant == VerifyVariant::proper_edge ||
                           variant == VerifyVariant::acyclic_edge ||
                           variant == VerifyVariant::eta_stage;
  if (edge_target != (c.target == ColoringTarget::edges))
    throw std::invalid_argument("verify: coloring target does not match variant");
  const auto& col = c.assignment;
  if (static_cast<int>(col.size()) != (edge_target ? g.edge_count() : g.vertex_count()))
    throw std::invalid_argument("verify: assignment length mismatch");

  switch (variant) {
    case VerifyVariant::proper_edge:
      return detail::improper_edge_pair(g, col);

    case VerifyVariant::acyclic_edge: {
      if (auto v = detail::improper_edge_pair(g, col)) return v;
      if (auto cyc = detail::bichromatic_edge_cycle(g, col))
        return Violation{"EvenCycleBichromatic", *cyc, "bichromatic cycle"};
      return std::nullopt;
    }

    case VerifyVariant::proper_vertex:
      return detail::improper_vertex_pair(g, col);

    case VerifyVariant::acyclic_vertex: {
      if (auto v = detail::improper_vertex_pair(g, col)) return v;
      std::set<int> colors(col.begin(), col.end());
      for (int a : colors) {
        for (int b : colors) {
          if (b <= a) continue;
          std::vector<char> in_set(g.vertex_count(), 0);
          for (int v = 0; v < g.vertex_count(); ++v)
            in_set[v] = (col[v] == a || col[v] == b);
          if (auto cyc = detail::induced_cycle(g, in_set))
            return Violation{"BichromaticCycle", *cyc, "two-colored cycle"};
        }
      }
      return std::nullopt;
    }

    case VerifyVariant::star: {
      if (auto v = detail::improper_vertex_pair(g, col)) return v;
      for (const auto& p : enumerate_paths(g, 3, params.cycle_cap))
        if (col[p[0]] == col[p[2]] && col[p[1]] == col[p[3]])
          return Violation{"Path3", p, "bichromatic path on 4 vertices"};
      return std::nullopt;
    }

    case VerifyVariant::frugal: {
      if (auto v = detail::improper_vertex_pair(g, col)) return v;
      for (int v = 0; v < g.vertex_count(); ++v) {
        std::map<int, std::vector<int>> by_color;
        for (int w : g.neighbors(v)) by_color[col[w]].push_back(w);
        for (auto& [color, members] : by_color)
          if (static_cast<int>(members.size()) > params.beta) {
            members.resize(params.beta + 1);
            return Violation{"FrugalSet", members,
                             "color repeated more than beta times in a neighborhood"};
          }
      }
      return std::nullopt;
    }

    case VerifyVariant::eta_stage: {
      // property 1: per-vertex color multiplicity <= eta
      for (int v = 0; v < g.vertex_count(); ++v) {
        std::map<int, std::vector<int>> by_color;
        for (int e : g.incident_edges(v)) by_color[col[e]].push_back(e);
        for (auto& [color, members] : by_color)
          if (static_cast<int>(members.size()) > params.eta) {
            std::sort(members.begin(), members.end());
            members.resize(params.eta + 1);
            return Violation{"EtaStar", members, "color multiplicity above eta at a vertex"};
          }
      }
      // property 3: no monochromatic cycle (per color class)
      std::set<int> colors(col.begin(), col.end());
      for (int a : colors) {
        std::vector<Edge> sub;
        std::vector<int> orig;
        for (int e = 0; e < g.edge_count(); ++e)
          if (col[e] == a) { sub.push_back(g.edge(e)); orig.push_back(e); }
        Graph class_graph(g.vertex_count(), sub);
        std::vector<char> all(g.vertex_count(), 1);
        if (detail::induced_cycle(class_graph, all)) {
          // report the class edges on the cycle
          auto cyc = detail::induced_cycle(class_graph, all);
          std::vector<int> scope;
          std::set<int> cv(cyc->begin(), cyc->end());
          for (std::size_t i = 0; i < sub.size(); ++i)
            if (cv.count(sub[i].first) && cv.count(sub[i].second)) scope.push_back(orig[i]);
          return Violation{"MonochromaticCycle", scope, "monochromatic cycle"};
        }
      }
      // property 2: no properly bichromatic cycle (capped cycle walk; the
      // stage coloring is not proper, so the color-pair degree argument
      // does not apply here)
      for (const auto& cyc : enumerate_cycles(g, g.vertex_count(), params.cycle_cap)) {
        if (cyc.size() % 2 != 0) continue;
        // walk the cycle and test alternation
        std::map<int, std::vector<int>> at;
        for (int e : cyc) {
          at[g.edge(e).first].push_back(e);
          at[g.edge(e).second].push_back(e);
        }
        int start = at.begin()->first;
        std::vector<int> cols;
        int v = start, prev = -1;
        do {
          int e = (at[v][0] != prev) ? at[v][0] : at[v][1];
          cols.push_back(col[e]);
          v = g.other_end(e, v);
          prev = e;
        } while (v != start);
        bool alternating = cols[0] != cols[1];
        for (std::size_t i = 0; i < cols.size() && alternating; ++i)
          if (cols[i] != cols[i % 2]) alternating = false;
        if (alternating)
          return Violation{"EvenCycleBichromatic", cyc, "properly bichromatic cycle"};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// Smallest N <= max_colors admitting a valid coloring; nullopt if none.
// Exhaustive with proper-constraint pruning and color-class symmetry
// breaking (a variable may only open one new color class).
inline std::optional<int> brute_force_chromatic(const Graph& g, VerifyVariant variant,
                                                VerifyParams params = {}, int max_colors = 8) {
  const bool edge_target = variant == VerifyVariant::proper_edge ||
                           variant == VerifyVariant::acyclic_edge ||
                           variant == VerifyVariant::eta_stage;
  const int vars = edge_target ? g.edge_count() : g.vertex_count();
  if (vars > 16) throw std::invalid_argument("brute_force_chromatic: more than 16 variables");
  if (max_colors > 8) throw std::invalid_argument("brute_force_chromatic: max_colors > 8");

  // conflict lists for the proper constraint
  std::vector<std::vector<int>> earlier_conflicts(vars);
  if (edge_target) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& inc = g.incident_edges(v);
      for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j)
          earlier_conflicts[std::max(inc[i], inc[j])].push_back(std::min(inc[i], inc[j]));
    }
  } else {
    for (const auto& [u, v] : g.edges()) earlier_conflicts[std::max(u, v)].push_back(std::min(u, v));
  }

  for (int n = 1; n <= max_colors; ++n) {
    std::vector<int> col(vars, 0);
    Coloring c{edge_target ? ColoringTarget::edges : ColoringTarget::vertices, {}, n};
    bool found = false;
    auto rec = [&](auto&& self, int i, int used) -> void {
      if (found) return;
      if (i == vars) {
        c.assignment = col;
        if (!verify(g, c, variant, params)) found = true;
        return;
      }
      const int limit = std::min(n - 1, used);  // open at most one new class
      for (int color = 0; color <= limit && !found; ++color) {
        bool ok = true;
        if (variant != VerifyVariant::eta_stage) {
          for (int other : earlier_conflicts[i])
            if (col[other] == color) { ok = false; break; }
        }
        if (!ok) continue;
        col[i] = color;
        self(self, i + 1, std::max(used, color + 1));
      }
    };
    rec(rec, 0, 0);
    if (found) return n;
  }
  return std::nullopt;
}

}  // namespace lllcolor
