#pragma once

#include <vector>

#include "polynorm/vec.hpp"

namespace polynorm {

/// A maximal face of a symmetric polytope together with its supporting
/// functional, an extreme point of the dual ball (scaled so the bound is 1).
struct Facet {
  Vec functional;
  std::vector<Vec> vertices;  // ball vertices with functional·v = 1, sorted
};

/// Convex polytope stored by its extreme points only (no symmetry assumed).
/// Vertex list is deduplicated, pruned to extreme points and kept in
/// canonical (lexicographic) order.
class GeneralPolytope {
 public:
  static GeneralPolytope from_points(int dim, std::vector<Vec> points);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  GeneralPolytope negated() const;

  friend bool operator==(const GeneralPolytope& a, const GeneralPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  GeneralPolytope(int dim, std::vector<Vec> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}
  int dim_ = 0;
  std::vector<Vec> vertices_;
};

/// Full-dimensional origin-symmetric polytope with both representations:
/// vertices (V-rep) and facet functionals d with d·x <= 1 (H-rep). Both
/// lists are canonical (sorted), so equality of members is polytope equality.
class SymmetricPolytope {
 public:
  /// Builds from points; prunes redundant ones, derives the H-rep, verifies
  /// central symmetry (SymmetryError) and full dimension (GeometryError).
  static SymmetricPolytope from_vertices(int dim, std::vector<Vec> points);

  /// Mirror of from_vertices: exact vertex enumeration from d·x <= 1 rows.
  /// Unbounded or degenerate input raises GeometryError.
  static SymmetricPolytope from_halfspaces(int dim, std::vector<Vec> rows);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& functionals() const { return functionals_; }

  /// Swaps the two representations; an involution on canonical forms.
  SymmetricPolytope polar_dual() const;

  /// One facet per extreme dual point; antipodal facets (F, -F) adjacent.
  std::vector<Facet> facets() const;

  GeneralPolytope as_general() const;

  /// Cross-validates the two representations; throws on any violation.
  void validate() const;

  friend bool operator==(const SymmetricPolytope& a, const SymmetricPolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ && a.functionals_ == b.functionals_;
  }

 private:
  SymmetricPolytope(int dim, std::vector<Vec> vertices, std::vector<Vec> functionals)
      : dim_(dim), vertices_(std::move(vertices)), functionals_(std::move(functionals)) {}
  int dim_ = 0;
  std::vector<Vec> vertices_;    // canonical V-rep
  std::vector<Vec> functionals_; // canonical H-rep, each row d means d·x <= 1
};

/// Already-canonical copy; kept for symmetry with the text-format round trip.
inline SymmetricPolytope canonicalize(const SymmetricPolytope& p) { return p; }

/// Exact membership test: is p a convex combination of the given points?
bool in_convex_hull(const Vec& p, const std::vector<Vec>& points);

/// Vertices of P intersected with {x : d·x = 0}, computed exactly in a
/// rational basis of ker d. d must be nonzero.
GeneralPolytope hyperplane_section(const SymmetricPolytope& p, const Vec& d);

GeneralPolytope minkowski_sum(const GeneralPolytope& a, const GeneralPolytope& b);

/// A - A, computed from pairwise vertex differences (an independent route
/// from minkowski_sum(A, -A), which must agree).
GeneralPolytope difference_body(const GeneralPolytope& a);

/// Exact volume in the polytope's affine hull, supported up to hull
/// dimension 3. Full-dimensional bodies get Lebesgue volume; lower
/// dimensional ones are measured in a deterministic rational basis of the
/// hull (volume ratios, the only thing consumers compare, are basis-free).
Rational volume(const GeneralPolytope& a);

/// True iff every vertex of b lies in the convex hull of a's vertices.
bool contains(const GeneralPolytope& a, const GeneralPolytope& b);

}  // namespace polynorm
