#include <doctest.h>

#include "lllcolor/generate.hpp"
#include "lllcolor/verify.hpp"
#include "lllcolor/vizing.hpp"

using namespace lllcolor;

TEST_CASE("proper and acyclic edge verification") {
  auto c4 = cycle_graph(4);
  Coloring bi{ColoringTarget::edges, {0, 1, 0, 1}, 2};
  auto v = verify(c4, bi, VerifyVariant::acyclic_edge);
  REQUIRE(v.has_value());
  CHECK(v->kind == "EvenCycleBichromatic");
  CHECK(v->scope == std::vector<int>{0, 1, 2, 3});
  CHECK(!verify(c4, bi, VerifyVariant::proper_edge).has_value());  // proper, just not acyclic

  Coloring good{ColoringTarget::edges, {0, 1, 0, 2}, 3};
  CHECK(!verify(c4, good, VerifyVariant::acyclic_edge).has_value());

  Coloring clash{ColoringTarget::edges, {0, 0, 1, 2}, 3};
  auto w = verify(c4, clash, VerifyVariant::proper_edge);
  REQUIRE(w.has_value());
  CHECK(w->kind == "ImproperPair");
  CHECK(w->scope == std::vector<int>{0, 1});
}

TEST_CASE("vertex variants on hand cases") {
  auto c4 = cycle_graph(4);
  Coloring two{ColoringTarget::vertices, {0, 1, 0, 1}, 2};
  auto v = verify(c4, two, VerifyVariant::acyclic_vertex);
  REQUIRE(v.has_value());
  CHECK(v->kind == "BichromaticCycle");
  Coloring three{ColoringTarget::vertices, {0, 1, 0, 2}, 3};
  CHECK(!verify(c4, three, VerifyVariant::acyclic_vertex).has_value());

  // star: P4 colored 1,2,1,2 has a bichromatic 3-edge path
  auto p4 = path_graph(4);
  Coloring alt{ColoringTarget::vertices, {0, 1, 0, 1}, 2};
  auto s = verify(p4, alt, VerifyVariant::star);
  REQUIRE(s.has_value());
  CHECK(s->kind == "Path3");
  CHECK(!verify(p4, alt, VerifyVariant::proper_vertex).has_value());

  // K4 rainbow is fine for everything vertex-flavored
  auto k4 = complete_graph(4);
  Coloring rainbow{ColoringTarget::vertices, {0, 1, 2, 3}, 4};
  CHECK(!verify(k4, rainbow, VerifyVariant::star).has_value());
  CHECK(!verify(k4, rainbow, VerifyVariant::acyclic_vertex).has_value());
  CHECK(!verify(k4, rainbow, VerifyVariant::frugal).has_value());

  // frugal: a 1-frugal violation on a star graph
  Graph star5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  Coloring rep{ColoringTarget::vertices, {0, 1, 1, 1, 2}, 3};
  VerifyParams p;
  p.beta = 2;
  auto f = verify(star5, rep, VerifyVariant::frugal, p);
  REQUIRE(f.has_value());
  CHECK(f->kind == "FrugalSet");
  CHECK(f->scope == std::vector<int>{1, 2, 3});
  p.beta = 3;
  CHECK(!verify(star5, rep, VerifyVariant::frugal, p).has_value());
}

TEST_CASE("eta-stage verification") {
  auto c6 = cycle_graph(6);
  VerifyParams p;
  p.eta = 2;
  // monochromatic cycle violates property 3
  Coloring mono{ColoringTarget::edges, {0, 0, 0, 0, 0, 0}, 1};
  auto v = verify(c6, mono, VerifyVariant::eta_stage, p);
  REQUIRE(v.has_value());
  CHECK(v->kind == "MonochromaticCycle");
  // properly bichromatic cycle violates property 2
  Coloring bi{ColoringTarget::edges, {0, 1, 0, 1, 0, 1}, 2};
  auto w = verify(c6, bi, VerifyVariant::eta_stage, p);
  REQUIRE(w.has_value());
  CHECK(w->kind == "EvenCycleBichromatic");
  // non-proper but eta-legal: break the cycle classes
  Coloring ok{ColoringTarget::edges, {0, 0, 1, 1, 0, 1}, 2};
  CHECK(!verify(c6, ok, VerifyVariant::eta_stage, p).has_value());
  // multiplicity above eta
  Graph star3(4, {{0, 1}, {0, 2}, {0, 3}});
  Coloring all{ColoringTarget::edges, {0, 0, 0}, 1};
  auto x = verify(star3, all, VerifyVariant::eta_stage, p);
  REQUIRE(x.has_value());
  CHECK(x->kind == "EtaStar");
  CHECK(x->scope == std::vector<int>{0, 1, 2});
}

TEST_CASE("verify rejects mismatched targets") {
  auto c4 = cycle_graph(4);
  Coloring vtx{ColoringTarget::vertices, {0, 1, 0, 1}, 2};
  CHECK_THROWS_AS(verify(c4, vtx, VerifyVariant::acyclic_edge), std::invalid_argument);
  Coloring shrt{ColoringTarget::edges, {0, 1}, 2};
  CHECK_THROWS_AS(verify(c4, shrt, VerifyVariant::acyclic_edge), std::invalid_argument);
}

TEST_CASE("brute-force chromatic oracles") {
  CHECK(brute_force_chromatic(cycle_graph(5), VerifyVariant::acyclic_edge) == 3);
  CHECK(brute_force_chromatic(cycle_graph(4), VerifyVariant::acyclic_vertex) == 3);
  CHECK(brute_force_chromatic(path_graph(4), VerifyVariant::star) == 3);
  CHECK(brute_force_chromatic(cycle_graph(5), VerifyVariant::proper_edge) == 3);
  CHECK(brute_force_chromatic(cycle_graph(6), VerifyVariant::proper_edge) == 2);
  CHECK(brute_force_chromatic(complete_graph(4), VerifyVariant::proper_edge) == 3);
  CHECK(brute_force_chromatic(complete_graph(4), VerifyVariant::proper_vertex) == 4);
  VerifyParams p;
  p.beta = 1;
  // 1-frugal on a 4-star: center + leaves all distinct
  Graph star5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(brute_force_chromatic(star5, VerifyVariant::frugal, p) == 5);
  p.beta = 2;
  CHECK(brute_force_chromatic(star5, VerifyVariant::frugal, p) == 3);
  // a triangle cannot be edge-colored with fewer than 3; none <= 2
  CHECK(!brute_force_chromatic(cycle_graph(3), VerifyVariant::proper_edge, {}, 2).has_value());
  CHECK_THROWS_AS(brute_force_chromatic(complete_graph(7), VerifyVariant::proper_edge),
                  std::invalid_argument);
}

TEST_CASE("vizing output always passes the proper-edge verifier") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_regular_graph(18, 4, seed);
    Coloring c{ColoringTarget::edges, vizing_proper_edge_coloring(g), g.max_degree() + 1};
    CHECK(!verify(g, c, VerifyVariant::proper_edge).has_value());
  }
}
