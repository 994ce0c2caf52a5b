#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lllcolor/generate.hpp"
#include "lllcolor/graph.hpp"

using namespace lllcolor;

namespace {

// Independent oracle: a set of edge indices is a simple cycle iff the
// touched vertices all have degree exactly 2 within the set and the set
// is connected.
bool is_simple_cycle(const Graph& g, const std::vector<int>& edge_set) {
  if (edge_set.size() < 3) return false;
  std::map<int, int> deg;
  for (int e : edge_set) {
    ++deg[g.edge(e).first];
    ++deg[g.edge(e).second];
  }
  for (const auto& [v, d] : deg)
    if (d != 2) return false;
  // connectivity over the edge set
  std::set<int> todo(edge_set.begin(), edge_set.end());
  std::vector<int> frontier{*todo.begin()};
  todo.erase(todo.begin());
  while (!frontier.empty()) {
    int e = frontier.back();
    frontier.pop_back();
    for (auto it = todo.begin(); it != todo.end();) {
      auto [a, b] = g.edge(*it);
      auto [x, y] = g.edge(e);
      if (a == x || a == y || b == x || b == y) {
        frontier.push_back(*it);
        it = todo.erase(it);
      } else {
        ++it;
      }
    }
  }
  return todo.empty();
}

// Exhaustive subset scan (feasible for m <= 16).
std::set<std::vector<int>> cycles_by_subset_scan(const Graph& g, int max_len) {
  std::set<std::vector<int>> out;
  const int m = g.edge_count();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> es;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) es.push_back(e);
    if (static_cast<int>(es.size()) > max_len || es.size() < 3) continue;
    if (is_simple_cycle(g, es)) out.insert(es);
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction and queries") {
  Graph g(4, {{1, 0}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.edge(0) == Edge{0, 1});  // normalized
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.edge_index(3, 2) == 2);
  CHECK(g.edge_index(3, 0) == 3);
  CHECK(!g.edge_index(0, 2).has_value());
  CHECK(g.max_degree() == 2);
  CHECK(g.other_end(0, 1) == 0);
  CHECK(g.degree(2) == 2);
}

TEST_CASE("graph rejects malformed input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("girth on known graphs") {
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(cycle_graph(7)) == 7);
  CHECK(girth(petersen_graph()) == 5);
  CHECK(girth(hypercube_graph(3)) == 4);
  CHECK(!girth(path_graph(6)).has_value());
  CHECK(!girth(Graph(3, {})).has_value());
}

TEST_CASE("girth multiplies under subdivision") {
  for (int k : {1, 2, 5}) {
    auto g = petersen_graph();
    auto sub = subdivide(g, k);
    CHECK(*girth(sub) == (k + 1) * *girth(g));
    CHECK(sub.max_degree() == 3);
  }
}

TEST_CASE("cycle enumeration matches the subset-scan oracle") {
  for (const Graph& g : {complete_graph(4), petersen_graph(), hypercube_graph(3),
                         cycle_graph(6), complete_graph(5)}) {
    if (g.edge_count() > 16) continue;
    auto oracle = cycles_by_subset_scan(g, g.vertex_count());
    auto got = enumerate_cycles(g, g.vertex_count());
    std::set<std::vector<int>> got_set(got.begin(), got.end());
    CHECK(got.size() == got_set.size());  // no duplicates
    CHECK(got_set == oracle);
  }
}

TEST_CASE("cycle enumeration on petersen with length cutoff") {
  auto g = petersen_graph();
  auto c5 = enumerate_cycles(g, 5);
  CHECK(c5.size() == 12);  // the petersen graph has exactly 12 pentagons
  for (const auto& c : c5) CHECK(is_simple_cycle(g, c));
  auto c6 = enumerate_cycles(g, 6);
  CHECK(c6.size() == 12 + 10);  // and exactly 10 hexagons
}

TEST_CASE("cycle enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_cycles(petersen_graph(), 10, 5), cap_exceeded);
  CHECK_THROWS_AS(enumerate_cycles(petersen_graph(), 2, 100), std::invalid_argument);
}

TEST_CASE("path enumeration matches a brute-force oracle") {
  for (const Graph& g : {complete_graph(4), petersen_graph(), cycle_graph(5)}) {
    for (int len : {1, 2, 3, 4}) {
      // oracle: all vertex sequences, canonical orientation
      std::set<std::vector<int>> oracle;
      std::vector<int> seq;
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == len + 1) {
          if (seq.front() < seq.back()) oracle.insert(seq);
          return;
        }
        for (int w = 0; w < g.vertex_count(); ++w) {
          if (!seq.empty() && !g.adjacent(seq.back(), w)) continue;
          if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
          seq.push_back(w);
          self(self);
          seq.pop_back();
        }
      };
      rec(rec);
      auto got = enumerate_paths(g, len);
      std::set<std::vector<int>> got_set(got.begin(), got.end());
      CHECK(got.size() == got_set.size());
      CHECK(got_set == oracle);
    }
  }
}

TEST_CASE("special pairs by direct count") {
  // complete bipartite K_{2,3}: vertices 0,1 vs 2,3,4; Delta=3.
  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  // {0,1} share 3 common neighbors: 27 > 9 -> special.
  // {2,3},{2,4},{3,4} share 2: 8 <= 9 -> not special.
  auto sp = special_pairs(k23);
  REQUIRE(sp.size() == 1);
  CHECK(sp[0] == std::pair<int, int>{0, 1});

  // petersen: strongly regular, non-adjacent pairs share exactly 1 neighbor
  CHECK(special_pairs(petersen_graph()).empty());
}
