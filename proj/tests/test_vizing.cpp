#include <doctest.h>

#include <set>

#include "lllcolor/generate.hpp"
#include "lllcolor/verify.hpp"
#include "lllcolor/vizing.hpp"

using namespace lllcolor;

namespace {
int colors_used(const std::vector<int>& c) {
  return static_cast<int>(std::set<int>(c.begin(), c.end()).size());
}
}  // namespace

TEST_CASE("small cases hit the exact edge-chromatic number") {
  CHECK(colors_used(vizing_proper_edge_coloring(cycle_graph(5))) == 3);  // class 2
  CHECK(colors_used(vizing_proper_edge_coloring(cycle_graph(6))) == 2);
  CHECK(colors_used(vizing_proper_edge_coloring(complete_graph(4))) == 3);
  CHECK(vizing_proper_edge_coloring(Graph(3, {})).empty());
  CHECK(colors_used(vizing_proper_edge_coloring(path_graph(5))) == 2);
}

TEST_CASE("agrees with the brute-force oracle on tiny graphs") {
  for (const Graph& g : {complete_graph(4), cycle_graph(5), cycle_graph(6), path_graph(6),
                         Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
                         Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})}) {
    int exact = *brute_force_chromatic(g, VerifyVariant::proper_edge, {}, 8);
    int got = colors_used(vizing_proper_edge_coloring(g));
    CHECK(got >= exact);
    CHECK(got <= g.max_degree() + 1);
  }
}

TEST_CASE("always proper and within Delta+1 colors on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (int d : {3, 4, 5, 6}) {
      auto g = random_regular_graph(24, d, seed * 131 + d);
      auto col = vizing_proper_edge_coloring(g);
      Coloring c{ColoringTarget::edges, col, d + 1};
      CHECK(!verify(g, c, VerifyVariant::proper_edge).has_value());
      CHECK(colors_used(col) <= d + 1);
      for (int x : col) {
        CHECK(x >= 0);
        CHECK(x <= d);
      }
    }
  }
}

TEST_CASE("handles irregular and dense graphs") {
  // complete graphs K5..K8 (odd ones are class 2)
  for (int n = 5; n <= 8; ++n) {
    auto g = complete_graph(n);
    auto col = vizing_proper_edge_coloring(g);
    Coloring c{ColoringTarget::edges, col, g.max_degree() + 1};
    CHECK(!verify(g, c, VerifyVariant::proper_edge).has_value());
    CHECK(colors_used(col) <= g.max_degree() + 1);
  }
  // hypercubes are class 1; the coloring must still be proper
  for (int d = 2; d <= 5; ++d) {
    auto g = hypercube_graph(d);
    Coloring c{ColoringTarget::edges, vizing_proper_edge_coloring(g), d + 1};
    CHECK(!verify(g, c, VerifyVariant::proper_edge).has_value());
  }
}
