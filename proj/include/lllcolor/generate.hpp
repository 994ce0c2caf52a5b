#pragma once

// Graph generators: fixed families, the pairing-model random regular
// generator, and edge subdivision (used to reach high-girth regimes at
// small scale: subdividing multiplies the girth while keeping the max
// degree for Delta >= 3).

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lllcolor/graph.hpp"
#include "lllcolor/rng.hpp"

namespace lllcolor {

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete(n): n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle(n): n must be >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path(n): n must be >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -> i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  return Graph(10, std::move(edges));
}

inline Graph hypercube_graph(int d) {
  if (d < 1 || d > 20) throw std::invalid_argument("hypercube(d): d must be in [1,20]");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if ((v ^ (1 << b)) > v) edges.push_back({v, v ^ (1 << b)});
  return Graph(n, std::move(edges));
}

// Pairing model with incremental acceptance (Steger-Wormald style):
// repeatedly match two random unpaired points, skipping pairs that would
// create a loop or multi-edge; restart if no valid pair remains. Far
// higher per-attempt success than whole-matching rejection, still uniform
// enough for property testing, and deterministic for a seed.
inline Graph random_regular_graph(int n, int d, std::uint64_t seed, int max_attempts = 1000) {
  if (n < 1 || d < 0 || d >= n) throw std::invalid_argument("random_regular: need 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular: n*d must be even");
  if (d == 0) return Graph(n, {});
  Rng rng(seed);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> pts(static_cast<std::size_t>(n) * d);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<int>(i / d);
    std::set<Edge> seen;
    std::vector<Edge> edges;
    bool stuck = false;
    while (!pts.empty() && !stuck) {
      bool placed = false;
      auto try_place = [&](std::size_t i, std::size_t j) {
        if (i == j || pts[i] == pts[j]) return false;
        Edge e{std::min(pts[i], pts[j]), std::max(pts[i], pts[j])};
        if (!seen.insert(e).second) return false;
        edges.push_back(e);
        if (i < j) std::swap(i, j);
        pts[i] = pts.back();
        pts.pop_back();
        pts[j] = pts.back();
        pts.pop_back();
        return true;
      };
      for (int t = 0; t < 64 && !placed; ++t)
        placed = try_place(rng.below(pts.size()), rng.below(pts.size()));
      if (!placed) {
        // exhaustive scan before declaring the attempt dead
        for (std::size_t i = 0; i < pts.size() && !placed; ++i)
          for (std::size_t j = i + 1; j < pts.size() && !placed; ++j)
            placed = try_place(i, j);
        stuck = !placed;
      }
    }
    if (!stuck) return Graph(n, std::move(edges));
  }
  throw std::runtime_error("random_regular: rejection limit reached");
}

// Replace every edge by a path of k+1 edges. New vertices are appended
// after the original ones, edge by edge in index order.
inline Graph subdivide(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("subdivide: k must be >= 0");
  if (k == 0) return g;
  int next = g.vertex_count();
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    int prev = u;
    for (int i = 0; i < k; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, v});
  }
  return Graph(next, std::move(edges));
}

}  // namespace lllcolor
