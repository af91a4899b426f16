#pragma once

#include <utility>

#include "polynorm/polytope.hpp"

namespace polynorm {

/// A finite-dimensional normed space presented by its polytope unit ball,
/// with the dual ball cached as the polar.
class PolyhedralSpace {
 public:
  explicit PolyhedralSpace(SymmetricPolytope ball)
      : ball_(std::move(ball)), dual_ball_(ball_.polar_dual()) {}

  int dim() const { return ball_.dim(); }
  const SymmetricPolytope& ball() const { return ball_; }
  const SymmetricPolytope& dual_ball() const { return dual_ball_; }

  /// Minkowski functional of the ball: max over facet functionals d of |d·x|.
  Rational norm(const Vec& x) const;

  /// Norm of a functional in the dual space.
  Rational dual_norm(const Vec& d) const;

 private:
  SymmetricPolytope ball_;
  SymmetricPolytope dual_ball_;
};

/// Exact min of ||y - a|| over a in A, plus a minimizing a. Encoded as the
/// LP: minimize t over barycentric weights on A's vertices subject to
/// +-d·(y - a) <= t for every facet functional d of the ball.
std::pair<Rational, Vec> dist_point_to_polytope(const PolyhedralSpace& space, const Vec& y,
                                                const GeneralPolytope& a);

/// Symmetrized vertex-max distance; valid because dist(·, convex set) is
/// convex, so each directed sup is attained at a vertex.
Rational hausdorff_distance(const PolyhedralSpace& space, const GeneralPolytope& a,
                            const GeneralPolytope& b);

/// The (possibly lower-dimensional) face where a dual-norm-one functional
/// attains 1. Throws FunctionalNotNorming when ||d||* != 1.
GeneralPolytope face_of_functional(const PolyhedralSpace& space, const Vec& d);

}  // namespace polynorm
