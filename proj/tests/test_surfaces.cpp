#include <doctest.h>

#include "oracles.hpp"
#include "reeb/error.hpp"
#include "reeb/graph_io.hpp"
#include "reeb/surfaces.hpp"

using namespace reeb;

TEST_CASE("surface descriptors") {
  CHECK(parse_surface("N:4") == SurfaceDescriptor{false, 4, 0});
  CHECK(parse_surface("O:2,1") == SurfaceDescriptor{true, 2, 1});
  CHECK(to_string(parse_surface("N:3,2")) == "N:3,2");
  CHECK(to_string(parse_surface("O:0")) == "O:0");
  CHECK_THROWS_AS(parse_surface("N:0"), ParseError);
  CHECK_THROWS_AS(parse_surface("X:1"), ParseError);
  CHECK_THROWS_AS(parse_surface("O:"), ParseError);
  CHECK_THROWS_AS(parse_surface("O:1,"), ParseError);
  CHECK_THROWS_AS(validate(SurfaceDescriptor{false, 0, 0}), PreconditionError);
}

TEST_CASE("presentations") {
  auto klein = presentation(parse_surface("N:2"));
  CHECK(klein.generators == 2);
  REQUIRE(klein.relators.size() == 1);
  CHECK(to_string(klein.relators[0]) == "a1 a1 a2 a2");

  auto torus = presentation(parse_surface("O:1"));
  REQUIRE(torus.relators.size() == 1);
  CHECK(to_string(torus.relators[0]) == "a1 a2 a1' a2'");

  auto holed = presentation(parse_surface("O:1,1"));
  CHECK(holed.generators == 2);
  CHECK(holed.relators.empty());
  auto s32 = presentation(parse_surface("N:3,2"));
  CHECK(s32.generators == 4);
  CHECK(s32.relators.empty());

  // The relator abelianizes to 0 or to all twos.
  for (std::size_t g = 1; g <= 5; ++g) {
    for (bool orientable : {true, false}) {
      SurfaceDescriptor s{orientable, g, 0};
      auto p = presentation(s);
      std::vector<int> exponent(p.generators, 0);
      for (int x : p.relators.at(0).letters()) exponent[std::abs(x) - 1] += x > 0 ? 1 : -1;
      for (int e : exponent) CHECK(e == (orientable ? 0 : 2));
    }
  }
}

TEST_CASE("corank and Reeb number") {
  CHECK(corank(parse_surface("O:3")) == 3);
  CHECK(corank(parse_surface("N:5")) == 2);
  CHECK(corank(parse_surface("N:2,3")) == 4);
  CHECK(corank(parse_surface("O:1,1")) == 2);
  CHECK(reeb_number(parse_surface("O:2,4")) == 2);
  CHECK(reeb_number(parse_surface("N:4,1")) == 2);
  CHECK(reeb_number(parse_surface("O:3")) == 3);
  for (std::size_t m = 1; m <= 10; ++m) {
    CHECK(corank({false, 2 * m, 0}) == m);
    CHECK(corank({false, 2 * m + 1, 0}) == m);
  }
  for (std::size_t g = 0; g <= 8; ++g) {
    CHECK(reeb_number({true, g, 0}) == corank({true, g, 0}));
    if (g >= 1) CHECK(reeb_number({false, g, 0}) == corank({false, g, 0}));
  }
  CHECK(euler_characteristic(parse_surface("O:2")) == -2);
  CHECK(euler_characteristic(parse_surface("N:3,1")) == -2);
}

TEST_CASE("orientation character") {
  CHECK(w1_vector(parse_surface("O:2")) == std::vector<bool>(4, false));
  CHECK(w1_vector(parse_surface("N:2")) == std::vector<bool>(2, true));
  CHECK(w1_vector(parse_surface("N:4")) == std::vector<bool>(4, true));
  CHECK_THROWS_AS(w1_vector(parse_surface("O:1,1")), PreconditionError);
}

TEST_CASE("Euler identity examples") {
  auto r2 = check_euler_identity(parse_surface("O:2"), {1, 4, 1}, initial_graph(2).graph);
  CHECK(r2.betti_minus_g == 0);
  CHECK(r2.maximal);

  auto path = parse_graph_text("edge a l1 p\nedge b p q\nedge c q l2\n").graph;
  auto kb = check_euler_identity(parse_surface("N:2"), {1, 2, 1}, path);
  CHECK(kb.g == 1);
  CHECK(kb.betti_minus_g == -1);
  CHECK_FALSE(kb.maximal);

  auto torus = check_euler_identity(parse_surface("O:1"), {1, 2, 1}, initial_graph(1).graph);
  CHECK(torus.betti_minus_g == 0);
  CHECK(torus.maximal);
  CHECK(torus.identities.size() >= 4);
}

TEST_CASE("Euler identity rejects inconsistent input") {
  auto g = initial_graph(2).graph;
  CHECK_THROWS_AS(check_euler_identity(parse_surface("O:2"), {1, 3, 1}, g), PreconditionError);
  CHECK_THROWS_AS(check_euler_identity(parse_surface("O:2"), {2, 5, 1}, g), PreconditionError);
  CHECK_THROWS_AS(check_euler_identity(parse_surface("N:3"), {1, 3, 0}, g), PreconditionError);
  CHECK_THROWS_AS(check_euler_identity(parse_surface("O:2,1"), {1, 4, 1}, g), PreconditionError);
  // Sphere with a census that needs more saddles than the graph has room for.
  CHECK_THROWS_AS(check_euler_identity(parse_surface("O:0"), {1, 0, 1}, g), PreconditionError);
}

TEST_CASE("Euler identity on generated triples") {
  Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    auto t = oracle::euler_triple(rng);
    auto rep = check_euler_identity(t.surface, t.census, t.graph);
    CHECK(rep.betti_minus_g == t.expected_betti_minus_g);
    CHECK(rep.maximal == t.expected_maximal);
    CHECK(2 * rep.betti_minus_g ==
          static_cast<long>(rep.census.delta3) - static_cast<long>(t.census.k1));
  }
}
