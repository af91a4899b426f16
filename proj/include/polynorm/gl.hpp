#pragma once

#include <optional>

#include "polynorm/normed_space.hpp"

namespace polynorm {

/// Per-ball-vertex distance record for one facet: the exact distance to the
/// facet and the lower bound 1 - x*(y) it must match for plumpness.
struct VertexRecord {
  Vec vertex;
  Rational dist;
  Rational bound;  // 1 - x*(y); dist >= bound always
};

struct PlumpnessReport {
  Facet facet;
  bool plump = false;
  std::vector<VertexRecord> records;
  std::optional<VertexRecord> witness;  // worst offender when not plump
};

struct GlVerdict {
  bool is_gl = false;
  std::vector<PlumpnessReport> plump_facets;
  std::vector<PlumpnessReport> non_plump_facets;
};

/// Decides dist(y, F) = 1 - x*(y) for every ball vertex y. Checking vertices
/// only is sound: y -> dist(y,F) + x*(y) - 1 is convex on the ball, so its
/// maximum sits at a vertex, and the ball-wide identity is equivalent to the
/// sphere-wide one.
PlumpnessReport is_plump_facet(const PolyhedralSpace& space, const Facet& facet);

/// GL <=> every facet plump. Facet checks are independent; parallel mode
/// fans them out and reassembles in canonical facet order.
GlVerdict is_gl(const PolyhedralSpace& space, bool parallel = false);

/// Face(x*) - Face(x*) contains the central section B ∩ ker x*. Meaningful
/// for plump facets (the lemma); callers skip non-plump ones.
bool difference_body_check(const PolyhedralSpace& space, const Facet& facet);

struct RogersShephardAudit {
  Rational lhs;  // vol(K - K)
  Rational rhs;  // C(2m, m) * vol(K)
  bool ok = false;
};

/// Exact difference-body volume bound, affine-hull dimension m <= 3.
RogersShephardAudit rogers_shephard_audit(const GeneralPolytope& k);

}  // namespace polynorm
