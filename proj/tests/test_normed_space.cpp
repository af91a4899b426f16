#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polynorm/normed_space.hpp"

using namespace polynorm;

namespace {

Rational Q(long p, long q = 1) { return Rational(p) / Rational(q); }

PolyhedralSpace hex_tilde_space() {
  return PolyhedralSpace(SymmetricPolytope::from_vertices(
      2, {Vec{Q(1), Q(0)}, Vec{Q(-1), Q(0)}, Vec{Q(1, 2), Q(1)}, Vec{Q(-1, 2), Q(-1)},
          Vec{Q(-1, 2), Q(1)}, Vec{Q(1, 2), Q(-1)}}));
}

PolyhedralSpace lambda_hex_space(const Rational& lambda) {
  return PolyhedralSpace(SymmetricPolytope::from_vertices(
      2, {Vec{Q(1), Q(0)}, Vec{Q(-1), Q(0)}, Vec{Q(0), Q(1)}, Vec{Q(0), Q(-1)},
          Vec{lambda, lambda}, Vec{-lambda, -lambda}}));
}

PolyhedralSpace square_space() {
  return PolyhedralSpace(SymmetricPolytope::from_vertices(
      2, {Vec{Q(1), Q(1)}, Vec{Q(1), Q(-1)}, Vec{Q(-1), Q(1)}, Vec{Q(-1), Q(-1)}}));
}

// Closed-form norm oracle for the tilde hexagon.
Rational tilde_norm(const Vec& x) {
  Rational a = rational_abs(x[1]);
  Rational b = rational_abs(x[0]) + rational_abs(x[1]) / 2;
  return a > b ? a : b;
}

Rational seeded_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 8);
  return Q(num(rng), den(rng));
}

}  // namespace

TEST_CASE("norm evaluation") {
  auto hex = hex_tilde_space();
  CHECK(hex.norm(Vec{Q(1), Q(1)}) == Q(3, 2));
  CHECK(hex.norm(Vec{Q(1), Q(1)}) == tilde_norm(Vec{Q(1), Q(1)}));
  CHECK(hex.norm(Vec{Q(0), Q(0)}) == Q(0));
  auto h1 = lambda_hex_space(Q(1));
  // basis-form norm max{|u|, |v|, |u - v|} at (1,-1)
  CHECK(h1.norm(Vec{Q(1), Q(-1)}) == Q(2));
  CHECK_THROWS_AS(hex.norm(Vec{Q(1)}), InputError);
}

TEST_CASE("norm axioms hold exactly on random rational inputs") {
  auto hex = hex_tilde_space();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Vec x{seeded_rational(rng), seeded_rational(rng)};
    Vec y{seeded_rational(rng), seeded_rational(rng)};
    Rational lam = seeded_rational(rng);
    CHECK(hex.norm(x * lam) == rational_abs(lam) * hex.norm(x));
    CHECK(hex.norm(x + y) <= hex.norm(x) + hex.norm(y));
    CHECK(hex.norm(x) == tilde_norm(x));
  }
}

TEST_CASE("distance from point to face of the lambda hexagon") {
  auto h34 = lambda_hex_space(Q(3, 4));
  // Face(f_2) with f_2 = (1/3, 1): the edge from (3/4,3/4) to (0,1)
  auto face = GeneralPolytope::from_points(2, {Vec{Q(3, 4), Q(3, 4)}, Vec{Q(0), Q(1)}});
  auto [d, minimizer] = dist_point_to_polytope(h34, Vec{Q(1), Q(0)}, face);
  CHECK(d == Q(1));
  // the minimizer is in the face and achieves the distance
  CHECK(in_convex_hull(minimizer, face.vertices()));
  CHECK(h34.norm(Vec{Q(1), Q(0)} - minimizer) == d);
}

TEST_CASE("distance to a set containing the point is zero") {
  auto sq = square_space();
  auto body = GeneralPolytope::from_points(
      2, {Vec{Q(0), Q(0)}, Vec{Q(2), Q(0)}, Vec{Q(0), Q(2)}});
  auto [d, minimizer] = dist_point_to_polytope(sq, Vec{Q(1, 2), Q(1, 2)}, body);
  CHECK(d == Q(0));
  CHECK(minimizer == Vec{Q(1, 2), Q(1, 2)});
}

TEST_CASE("distance across the lambda=1 hexagon") {
  auto h1 = lambda_hex_space(Q(1));
  auto face = GeneralPolytope::from_points(2, {Vec{Q(1), Q(1)}, Vec{Q(0), Q(1)}});
  auto [d, minimizer] = dist_point_to_polytope(h1, Vec{Q(0), Q(-1)}, face);
  CHECK(d == Q(2));
  // independent grid oracle over the edge parameter
  Rational grid_min = -1;
  for (int j = 0; j <= 64; ++j) {
    Vec a = Vec{Q(1), Q(1)} * Q(j, 64) + Vec{Q(0), Q(1)} * Q(64 - j, 64);
    Rational v = h1.norm(Vec{Q(0), Q(-1)} - a);
    if (grid_min < 0 || v < grid_min) grid_min = v;
  }
  CHECK(grid_min == Q(2));
}

TEST_CASE("hausdorff distance") {
  auto sq = square_space();
  auto a = GeneralPolytope::from_points(2, {Vec{Q(0), Q(0)}, Vec{Q(1), Q(0)}});
  auto b = GeneralPolytope::from_points(2, {Vec{Q(0), Q(0)}});
  CHECK(hausdorff_distance(sq, a, b) == Q(1));
  CHECK(hausdorff_distance(sq, a, a) == Q(0));
  CHECK(hausdorff_distance(sq, b, sq.ball().as_general()) == Q(1));
}

TEST_CASE("face of functional") {
  auto hex = hex_tilde_space();
  auto top = face_of_functional(hex, Vec{Q(0), Q(1)});
  CHECK(top.vertices() == std::vector<Vec>{Vec{Q(-1, 2), Q(1)}, Vec{Q(1, 2), Q(1)}});
  auto edge = face_of_functional(hex, Vec{Q(1), Q(1, 2)});
  CHECK(edge.vertices() == std::vector<Vec>{Vec{Q(1, 2), Q(1)}, Vec{Q(1), Q(0)}});
  auto sq = square_space();
  auto right = face_of_functional(sq, Vec{Q(1), Q(0)});
  CHECK(right.vertices() == std::vector<Vec>{Vec{Q(1), Q(-1)}, Vec{Q(1), Q(1)}});
  CHECK_THROWS_AS(face_of_functional(hex, Vec{Q(1), Q(1)}), FunctionalNotNorming);
  // a non-extreme norm-one functional yields a lower-dimensional face
  auto corner = face_of_functional(sq, Vec{Q(1, 2), Q(1, 2)});
  CHECK(corner.vertices() == std::vector<Vec>{Vec{Q(1), Q(1)}});
}

TEST_CASE("face distance lower bound holds corpus-wide") {
  for (const auto& space : {hex_tilde_space(), square_space(), lambda_hex_space(Q(3, 4))}) {
    for (const auto& facet : space.ball().facets()) {
      auto face = GeneralPolytope::from_points(space.dim(), facet.vertices);
      for (const Vec& y : space.ball().vertices()) {
        auto [d, mini] = dist_point_to_polytope(space, y, face);
        CHECK(d >= 1 - dot(facet.functional, y));
        CHECK(space.norm(y - mini) == d);
      }
    }
  }
}
