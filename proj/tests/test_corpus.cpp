#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polynorm/corpus.hpp"
#include "polynorm/planar.hpp"

using namespace polynorm;

namespace {
Rational Q(long p, long q = 1) { return Rational(p) / Rational(q); }
}  // namespace

TEST_CASE("named fixtures") {
  CHECK(fixture("square").vertices() ==
        std::vector<Vec>{Vec{Q(-1), Q(-1)}, Vec{Q(-1), Q(1)}, Vec{Q(1), Q(-1)}, Vec{Q(1), Q(1)}});
  CHECK(fixture("diamond").functionals() == fixture("square").vertices());
  auto hex = fixture("hex_tilde");
  CHECK(hex.vertices().size() == 6);
  CHECK(std::find(hex.vertices().begin(), hex.vertices().end(), Vec{Q(1, 2), Q(1)}) !=
        hex.vertices().end());
  auto h34 = fixture("hex_lambda:3/4");
  CHECK(std::find(h34.vertices().begin(), h34.vertices().end(), Vec{Q(3, 4), Q(3, 4)}) !=
        h34.vertices().end());
  CHECK(fixture("hex_lambda:1") == lambda_hexagon(Q(1)).space.ball());
  CHECK(fixture("oct_rational").vertices().size() == 8);
  CHECK(fixture("cube3").vertices().size() == 8);
  CHECK(fixture("crosspoly3").vertices().size() == 6);
  CHECK(fixture("prism_hex3").vertices().size() == 12);
  CHECK(fixture("prism_hex3").functionals().size() == 8);
  CHECK_THROWS_AS(fixture("pentagon"), InputError);
  CHECK_THROWS_AS(fixture("hex_lambda:1/2"), InputError);
}

TEST_CASE("fixtures satisfy the polytope invariants") {
  for (const char* name : {"square", "diamond", "hex_tilde", "hex_lambda:3/4", "oct_rational",
                           "cube3", "crosspoly3", "prism_hex3"}) {
    CHECK_NOTHROW(fixture(name).validate());
  }
}

TEST_CASE("random polygons are deterministic and well-formed") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 10ull, 99ull}) {
    for (int pairs : {2, 3, 4, 5, 6}) {
      CorpusSpec spec{seed, pairs, 16};
      auto a = random_symmetric_polygon(spec);
      auto b = random_symmetric_polygon(spec);
      CHECK(a == b);
      CHECK(static_cast<int>(a.vertices().size()) == 2 * pairs);
      CHECK_NOTHROW(a.validate());
    }
  }
}

TEST_CASE("two-pair polygons are parallelograms, hence GL") {
  for (std::uint64_t seed : {1ull, 7ull, 21ull}) {
    auto p = random_symmetric_polygon({seed, 2, 16});
    CHECK(classify_2d(PolyhedralSpace(p)).tag == PlanarTag::Parallelogram);
  }
}

TEST_CASE("four-pair polygons are octagons, hence never GL") {
  for (std::uint64_t seed : {5ull, 6ull, 8ull}) {
    auto p = random_symmetric_polygon({seed, 4, 16});
    CHECK(classify_2d(PolyhedralSpace(p)).tag == PlanarTag::NotGL);
  }
}

TEST_CASE("random 3d polytopes are deterministic and well-formed") {
  for (std::uint64_t seed : {4ull, 12ull}) {
    CorpusSpec spec{seed, 4, 8};
    auto a = random_symmetric_polytope_3d(spec);
    CHECK(a == random_symmetric_polytope_3d(spec));
    CHECK(static_cast<int>(a.vertices().size()) == 8);
    CHECK_NOTHROW(a.validate());
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(random_symmetric_polygon({1, 1, 16}), InputError);
  CHECK_THROWS_AS(random_symmetric_polygon({1, 7, 16}), InputError);
  CHECK_THROWS_AS(random_symmetric_polytope_3d({1, 2, 16}), InputError);
}
