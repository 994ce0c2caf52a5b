#pragma once

// Simple undirected graph with stable edge indices, plus the structural
// queries the coloring toolkit needs: girth, bounded cycle/path
// enumeration, and special-pair detection.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lllcolor {

/// Thrown when an enumeration would produce more items than its cap allows.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

using Edge = std::pair<int, int>;  // normalized so that first < second

class Graph {
 public:
  Graph() = default;

  // Edges keep their input order; that order defines the edge indices
  // colorings refer to. Rejects self-loops and duplicate edges.
  Graph(int vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.assign(n_, {});
    incident_.assign(n_, {});
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto& [u, v] = edges_[i];
      if (u > v) std::swap(u, v);
      if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
      if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
      if (!seen.insert(edges_[i]).second)
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      incident_[u].push_back(static_cast<int>(i));
      incident_[v].push_back(static_cast<int>(i));
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  bool adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::optional<int> edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e : incident_[u])
      if (edges_[e] == Edge{u, v}) return e;
    return std::nullopt;
  }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // Other endpoint of edge e as seen from v.
  int other_end(int e, int v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> incident_;  // edge indices at each vertex
};

struct GraphStats {
  int vertex_count = 0;
  int edge_count = 0;
  int max_degree = 0;
  std::optional<int> girth;  // nullopt means acyclic
};

// Exact girth by BFS from every vertex. For the shortest cycle, a BFS
// rooted at one of its vertices meets itself at exactly the right depth,
// so the minimum over all roots is exact.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent_edge(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best != -1 && 2 * dist[u] >= best) continue;
      for (int e : g.incident_edges(u)) {
        if (e == parent_edge[u]) continue;
        int w = g.other_end(e, u);
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = e;
          q.push(w);
        } else {
          int len = dist[u] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

inline GraphStats stats(const Graph& g) {
  return GraphStats{g.vertex_count(), g.edge_count(), g.max_degree(), girth(g)};
}

// A cycle in canonical form: its sorted set of edge indices.
using CycleEdges = std::vector<int>;

// All simple cycles of length <= max_len, each exactly once. DFS from
// each start vertex s, restricted to vertices > s except when closing
// back to s; the duplicate orientation is removed by requiring the
// second vertex on the path to be smaller than the last.
inline std::vector<CycleEdges> enumerate_cycles(
    const Graph& g, int max_len, std::size_t cap = kDefaultEnumerationCap) {
  if (max_len < 3) throw std::invalid_argument("max_len must be >= 3");
  std::vector<CycleEdges> out;
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path_vertices, path_edges;

  auto emit = [&](int closing_edge) {
    if (out.size() >= cap) throw cap_exceeded("cycle enumeration exceeded cap");
    CycleEdges c = path_edges;
    c.push_back(closing_edge);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  };

  for (int s = 0; s < n; ++s) {
    path_vertices.assign(1, s);
    on_path[s] = 1;
    path_edges.clear();
    // iterative DFS with explicit stack of (vertex, next incident index)
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    while (!stack.empty()) {
      auto& [u, it] = stack.back();
      if (it >= g.incident_edges(u).size()) {
        stack.pop_back();
        on_path[u] = 0;
        path_vertices.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
        continue;
      }
      int e = g.incident_edges(u)[it++];
      int w = g.other_end(e, u);
      int len = static_cast<int>(path_edges.size()) + 1;
      if (w == s && len >= 3) {
        // close the cycle once: orientation with second vertex < last vertex
        if (path_vertices[1] < path_vertices.back()) emit(e);
        continue;
      }
      if (w <= s || on_path[w] || len >= max_len) continue;
      on_path[w] = 1;
      path_vertices.push_back(w);
      path_edges.push_back(e);
      stack.push_back({w, 0});
    }
    on_path[s] = 0;
  }
  return out;
}

// All simple paths with the given number of edges, reported once each in
// canonical orientation (lexicographically smaller endpoint first).
inline std::vector<std::vector<int>> enumerate_paths(
    const Graph& g, int edge_count, std::size_t cap = kDefaultEnumerationCap) {
  if (edge_count < 1) throw std::invalid_argument("edge_count must be >= 1");
  std::vector<std::vector<int>> out;
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;

  auto dfs = [&](auto&& self, int u) -> void {
    if (static_cast<int>(path.size()) == edge_count + 1) {
      if (path.front() < path.back()) {
        if (out.size() >= cap) throw cap_exceeded("path enumeration exceeded cap");
        out.push_back(path);
      }
      return;
    }
    for (int w : g.neighbors(u)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int s = 0; s < n; ++s) {
    on_path[s] = 1;
    path.assign(1, s);
    dfs(dfs, s);
    on_path[s] = 0;
  }
  return out;
}

// Non-adjacent pairs {u,v} whose common-neighbor count t satisfies
// t^3 > Delta^2 (exact integer form of t > Delta^(2/3)).
inline std::vector<std::pair<int, int>> special_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  const int n = g.vertex_count();
  const std::int64_t dd = static_cast<std::int64_t>(g.max_degree()) * g.max_degree();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const auto& a = g.neighbors(u);
      const auto& b = g.neighbors(v);
      std::int64_t t = 0;
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++t; ++i; ++j; }
      }
      if (t * t * t > dd) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace lllcolor
