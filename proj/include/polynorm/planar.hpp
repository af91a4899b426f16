#pragma once

#include <optional>
#include <utility>

#include "polynorm/normed_space.hpp"

namespace polynorm {

enum class PlanarTag { Parallelogram, AffineRegularHexagon, NotGL };

/// Classification result for a 2D space. For the two GL classes the basis
/// pair (v_1, v_2) reproduces the vertex set: {±v_1, ±v_2} for a
/// parallelogram, {±v_1, ±v_2, ±(v_1+v_2)} for an affine-regular hexagon.
struct PlanarClass {
  PlanarTag tag = PlanarTag::NotGL;
  std::optional<std::pair<Vec, Vec>> basis;
};

/// NotGL exactly when the GL check fails; any GL polygon must land in one of
/// the two classes, so an unclassifiable GL polygon raises TheoremViolation.
PlanarClass classify_2d(const PolyhedralSpace& space);

/// One antipodal edge pair of a polygon, with the edge length measured in
/// the polygon's own norm.
struct SegmentRecord {
  Vec a;
  Vec b;
  Rational length;
};

/// All antipodal edge pairs, sorted by descending length.
std::vector<SegmentRecord> segment_census(const PolyhedralSpace& space);

/// The hexagon with vertices ±(1,0), ±(0,1), ±(λ,λ), λ in (1/2, 1], and its
/// three positive facet functionals.
struct LambdaHexagon {
  Rational lambda;
  PolyhedralSpace space;
  Vec f1;  // (1, (1-λ)/λ)
  Vec f2;  // ((1-λ)/λ, 1)
  Vec f3;  // (-1, 1)
};

LambdaHexagon lambda_hexagon(const Rational& lambda);

/// Builds the hexagon with vertices ±(1,0), ±(1/2,1), ±(-1/2,1).
PolyhedralSpace hex_tilde();

struct PropertyAProbe {
  Rational min_dist;  // exact min over the top edge of ||x - α·y(t)||
  Rational bound;     // 1 - α t
  bool consistent;    // α > 1 implies min_dist > bound
};

/// Probes the hexagon above at y(t) = t·(1/2,1) + (1-t)·(1,0): the minimum
/// distance from α·y(t) to the face of (0,1) against the bound 1 - α t.
PropertyAProbe property_a_probe(const Rational& t, const Rational& alpha);

}  // namespace polynorm
