#include "polynorm/corpus.hpp"

#include <random>
#include <set>

#include "polynorm/errors.hpp"

namespace polynorm {

namespace {

Rational Q(long p, long q = 1) { return Rational(p) / Rational(q); }

SymmetricPolytope hex_lambda(const Rational& lambda) {
  if (!(lambda > Q(1, 2)) || lambda > 1)
    throw InputError("hex_lambda: lambda must lie in (1/2, 1]");
  return SymmetricPolytope::from_vertices(
      2, {Vec{Q(1), Q(0)}, Vec{Q(-1), Q(0)}, Vec{Q(0), Q(1)}, Vec{Q(0), Q(-1)},
          Vec{lambda, lambda}, Vec{-lambda, -lambda}});
}

std::vector<Vec> with_negations(std::vector<Vec> points) {
  size_t n = points.size();
  for (size_t i = 0; i < n; ++i) points.push_back(Vec(points[i].dim()) - points[i]);
  return points;
}

SymmetricPolytope random_symmetric(const CorpusSpec& spec, int dim) {
  if (spec.pairs < dim || spec.pairs > 6)
    throw InputError("random generation needs between " + std::to_string(dim) +
                     " and 6 vertex pairs");
  if (spec.denominator < 1) throw InputError("denominator bound must be positive");
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> num(-spec.denominator + 1, spec.denominator - 1);
  std::uniform_int_distribution<long> axis_num(spec.denominator, 2 * spec.denominator);
  // points are drawn on a random rational ellipse/ellipsoid: distinct points
  // of a strictly convex surface are always in convex position, so every
  // sampled pair survives as a vertex pair
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rational> axes;
    for (int k = 0; k < dim; ++k) axes.push_back(Q(axis_num(rng), spec.denominator));
    std::set<Vec> params;
    for (int tries = 0; static_cast<int>(params.size()) < spec.pairs && tries < 200; ++tries) {
      Vec t(dim - 1);
      Rational norm2 = 0;
      for (int k = 0; k < dim - 1; ++k) {
        t[k] = Q(num(rng), spec.denominator);
        norm2 += t[k] * t[k];
      }
      if (norm2 < 1) params.insert(std::move(t));  // keeps the open x > 0 hemisphere
    }
    if (static_cast<int>(params.size()) < spec.pairs) continue;
    std::vector<Vec> points;
    for (const Vec& t : params) {
      Rational norm2 = 0;
      for (int k = 0; k < dim - 1; ++k) norm2 += t[k] * t[k];
      Vec p(dim);
      p[0] = axes[0] * (1 - norm2) / (1 + norm2);
      for (int k = 0; k < dim - 1; ++k)
        p[k + 1] = axes[static_cast<size_t>(k + 1)] * 2 * t[k] / (1 + norm2);
      points.push_back(std::move(p));
    }
    try {
      auto poly = SymmetricPolytope::from_vertices(dim, with_negations(std::move(points)));
      if (static_cast<int>(poly.vertices().size()) == 2 * spec.pairs) return poly;
    } catch (const GeometryError&) {
      // degenerate (e.g. coplanar in 3D); resample
    }
  }
  throw GeometryError("random generation failed after bounded retries");
}

}  // namespace

SymmetricPolytope fixture(const std::string& name) {
  if (name == "square")
    return SymmetricPolytope::from_vertices(
        2, {Vec{Q(1), Q(1)}, Vec{Q(1), Q(-1)}, Vec{Q(-1), Q(1)}, Vec{Q(-1), Q(-1)}});
  if (name == "diamond")
    return SymmetricPolytope::from_vertices(
        2, {Vec{Q(1), Q(0)}, Vec{Q(-1), Q(0)}, Vec{Q(0), Q(1)}, Vec{Q(0), Q(-1)}});
  if (name == "hex_tilde")
    return SymmetricPolytope::from_vertices(
        2, {Vec{Q(1), Q(0)}, Vec{Q(-1), Q(0)}, Vec{Q(1, 2), Q(1)}, Vec{Q(-1, 2), Q(-1)},
            Vec{Q(-1, 2), Q(1)}, Vec{Q(1, 2), Q(-1)}});
  if (name.rfind("hex_lambda:", 0) == 0) return hex_lambda(parse_rational(name.substr(11)));
  if (name == "oct_rational")
    return SymmetricPolytope::from_vertices(
        2, {Vec{Q(1), Q(0)}, Vec{Q(-1), Q(0)}, Vec{Q(0), Q(1)}, Vec{Q(0), Q(-1)},
            Vec{Q(3, 4), Q(3, 4)}, Vec{Q(-3, 4), Q(-3, 4)}, Vec{Q(3, 4), Q(-3, 4)},
            Vec{Q(-3, 4), Q(3, 4)}});
  if (name == "cube3")
    return SymmetricPolytope::from_halfspaces(
        3, {Vec{Q(1), Q(0), Q(0)}, Vec{Q(-1), Q(0), Q(0)}, Vec{Q(0), Q(1), Q(0)},
            Vec{Q(0), Q(-1), Q(0)}, Vec{Q(0), Q(0), Q(1)}, Vec{Q(0), Q(0), Q(-1)}});
  if (name == "crosspoly3")
    return SymmetricPolytope::from_vertices(
        3, {Vec{Q(1), Q(0), Q(0)}, Vec{Q(-1), Q(0), Q(0)}, Vec{Q(0), Q(1), Q(0)},
            Vec{Q(0), Q(-1), Q(0)}, Vec{Q(0), Q(0), Q(1)}, Vec{Q(0), Q(0), Q(-1)}});
  if (name == "prism_hex3") {
    std::vector<Vec> verts;
    auto hex = fixture("hex_tilde");
    for (const Vec& v : hex.vertices()) {
      verts.push_back(Vec{v[0], v[1], Q(1)});
      verts.push_back(Vec{v[0], v[1], Q(-1)});
    }
    return SymmetricPolytope::from_vertices(3, std::move(verts));
  }
  throw InputError("unknown fixture: " + name);
}

SymmetricPolytope random_symmetric_polygon(const CorpusSpec& spec) {
  return random_symmetric(spec, 2);
}

SymmetricPolytope random_symmetric_polytope_3d(const CorpusSpec& spec) {
  return random_symmetric(spec, 3);
}

}  // namespace polynorm
