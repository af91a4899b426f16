#include "polynorm/normed_space.hpp"

#include "polynorm/errors.hpp"
#include "polynorm/lp.hpp"

namespace polynorm {

Rational PolyhedralSpace::norm(const Vec& x) const {
  if (x.dim() != dim()) throw InputError("norm: dimension mismatch");
  Rational best = 0;
  for (const Vec& d : ball_.functionals()) {
    Rational v = rational_abs(dot(d, x));
    if (v > best) best = v;
  }
  return best;
}

Rational PolyhedralSpace::dual_norm(const Vec& d) const {
  if (d.dim() != dim()) throw InputError("dual_norm: dimension mismatch");
  Rational best = 0;
  for (const Vec& v : ball_.vertices()) {
    Rational val = rational_abs(dot(d, v));
    if (val > best) best = val;
  }
  return best;
}

std::pair<Rational, Vec> dist_point_to_polytope(const PolyhedralSpace& space, const Vec& y,
                                                const GeneralPolytope& a) {
  if (y.dim() != space.dim() || a.dim() != space.dim())
    throw InputError("dist: dimension mismatch");
  const auto& verts = a.vertices();
  int k = static_cast<int>(verts.size());
  // variables: lambda_1..lambda_k, t
  LpProblem lp;
  lp.vars = k + 1;
  lp.objective = Vec(k + 1);
  lp.objective[k] = 1;
  Vec ones(k + 1);
  for (int i = 0; i < k; ++i) ones[i] = 1;
  lp.equal.push_back({std::move(ones), Rational(1)});
  for (int i = 0; i < k; ++i) {
    Vec row(k + 1);
    row[i] = -1;
    lp.less_eq.push_back({std::move(row), Rational(0)});
  }
  for (const Vec& d : space.ball().functionals()) {
    // d·(y - sum lambda_i v_i) <= t
    Vec row(k + 1);
    for (int i = 0; i < k; ++i) row[i] = -dot(d, verts[static_cast<size_t>(i)]);
    row[k] = -1;
    lp.less_eq.push_back({std::move(row), -dot(d, y)});
  }
  auto out = solve_lp(lp);
  if (out.status != LpStatus::Optimal)
    throw TheoremViolation("distance LP must be solvable for a nonempty polytope");
  Vec minimizer(space.dim());
  for (int i = 0; i < k; ++i) minimizer = minimizer + verts[static_cast<size_t>(i)] * out.point[i];
  return {out.optimum, minimizer};
}

Rational hausdorff_distance(const PolyhedralSpace& space, const GeneralPolytope& a,
                            const GeneralPolytope& b) {
  if (a.dim() != b.dim()) throw InputError("hausdorff: dimension mismatch");
  Rational best = 0;
  for (const Vec& v : a.vertices()) {
    Rational d = dist_point_to_polytope(space, v, b).first;
    if (d > best) best = d;
  }
  for (const Vec& v : b.vertices()) {
    Rational d = dist_point_to_polytope(space, v, a).first;
    if (d > best) best = d;
  }
  return best;
}

GeneralPolytope face_of_functional(const PolyhedralSpace& space, const Vec& d) {
  if (d.dim() != space.dim()) throw InputError("face_of_functional: dimension mismatch");
  if (space.dual_norm(d) != 1)
    throw FunctionalNotNorming("functional " + d.str() + " does not have dual norm 1");
  std::vector<Vec> face;
  for (const Vec& v : space.ball().vertices()) {
    if (dot(d, v) == 1) face.push_back(v);
  }
  // the max over the ball is attained at a vertex, so the face is nonempty
  return GeneralPolytope::from_points(space.dim(), std::move(face));
}

}  // namespace polynorm
