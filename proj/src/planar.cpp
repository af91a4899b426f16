#include "polynorm/planar.hpp"

#include <algorithm>

#include "polynorm/errors.hpp"
#include "polynorm/gl.hpp"

namespace polynorm {

namespace {

Vec lex_positive(const Vec& v) { return v < Vec(v.dim()) - v ? Vec(v.dim()) - v : v; }

// One representative per antipodal vertex pair, in canonical order.
std::vector<Vec> pair_reps(const std::vector<Vec>& vertices) {
  std::vector<Vec> reps;
  for (const Vec& v : vertices) {
    Vec r = lex_positive(v);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace

PlanarClass classify_2d(const PolyhedralSpace& space) {
  if (space.dim() != 2) throw InputError("classify_2d: dimension must be 2");
  if (!is_gl(space).is_gl) return {PlanarTag::NotGL, std::nullopt};
  auto reps = pair_reps(space.ball().vertices());
  if (reps.size() == 2) return {PlanarTag::Parallelogram, std::make_pair(reps[1], reps[0])};
  if (reps.size() == 3) {
    // search the finite labelings: one pair plays v_1 + v_2, signs free;
    // all-positive labelings are tried first so the natural basis wins
    for (auto [sp, sq] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
      for (int sum_idx = 0; sum_idx < 3; ++sum_idx) {
        const Vec& c = reps[static_cast<size_t>(sum_idx)];
        Vec v1 = reps[static_cast<size_t>((sum_idx + 1) % 3)] * Rational(sp);
        Vec v2 = reps[static_cast<size_t>((sum_idx + 2) % 3)] * Rational(sq);
        Vec s = v1 + v2;
        if (s == c) return {PlanarTag::AffineRegularHexagon, std::make_pair(v1, v2)};
        if (s == Vec(2) - c)
          return {PlanarTag::AffineRegularHexagon, std::make_pair(Vec(2) - v1, Vec(2) - v2)};
      }
    }
  }
  throw TheoremViolation("GL polygon is neither a parallelogram nor an affine-regular hexagon");
}

std::vector<SegmentRecord> segment_census(const PolyhedralSpace& space) {
  if (space.dim() != 2) throw InputError("segment_census: dimension must be 2");
  std::vector<SegmentRecord> census;
  for (const auto& facet : space.ball().facets()) {
    if (facet.functional < lex_positive(facet.functional)) continue;  // one per pair
    SegmentRecord rec;
    rec.a = facet.vertices.front();
    rec.b = facet.vertices.back();
    rec.length = space.norm(rec.b - rec.a);
    census.push_back(std::move(rec));
  }
  std::stable_sort(census.begin(), census.end(),
                   [](const SegmentRecord& x, const SegmentRecord& y) { return y.length < x.length; });
  return census;
}

LambdaHexagon lambda_hexagon(const Rational& lambda) {
  if (!(lambda > Rational(1) / 2) || lambda > 1)
    throw InputError("lambda_hexagon: lambda must lie in (1/2, 1]");
  Rational mu = (1 - lambda) / lambda;
  PolyhedralSpace space(SymmetricPolytope::from_vertices(
      2, {Vec{Rational(1), Rational(0)}, Vec{Rational(-1), Rational(0)},
          Vec{Rational(0), Rational(1)}, Vec{Rational(0), Rational(-1)}, Vec{lambda, lambda},
          Vec{-lambda, -lambda}}));
  return {lambda, std::move(space), Vec{Rational(1), mu}, Vec{mu, Rational(1)},
          Vec{Rational(-1), Rational(1)}};
}

PolyhedralSpace hex_tilde() {
  Rational h(1, 2);
  return PolyhedralSpace(SymmetricPolytope::from_vertices(
      2, {Vec{Rational(1), Rational(0)}, Vec{Rational(-1), Rational(0)}, Vec{h, Rational(1)},
          Vec{-h, Rational(-1)}, Vec{-h, Rational(1)}, Vec{h, Rational(-1)}}));
}

PropertyAProbe property_a_probe(const Rational& t, const Rational& alpha) {
  if (t < 0 || t > 1) throw InputError("property_a_probe: t must lie in [0, 1]");
  auto space = hex_tilde();
  Vec e1{Rational(1), Rational(0)};
  Vec e2{Rational(1, 2), Rational(1)};
  Vec y = e2 * t + e1 * (1 - t);
  auto face = face_of_functional(space, Vec{Rational(0), Rational(1)});
  PropertyAProbe probe;
  probe.min_dist = dist_point_to_polytope(space, y * alpha, face).first;
  probe.bound = 1 - alpha * t;
  probe.consistent = alpha <= 1 || probe.min_dist > probe.bound;
  return probe;
}

}  // namespace polynorm
