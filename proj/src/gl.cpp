#include "polynorm/gl.hpp"

#include <algorithm>
#include <future>

#include "polynorm/errors.hpp"
#include "polynorm/linalg.hpp"
#include "polynorm/lp.hpp"

namespace polynorm {

namespace {

// Feasibility of: exists a in conv(face) with ||y - a|| <= bound.
// Since dist(y, F) >= 1 - x*(y) unconditionally, feasibility at
// bound = 1 - x*(y) pins the distance to the bound exactly.
bool within_distance(const PolyhedralSpace& space, const Vec& y,
                     const std::vector<Vec>& face_verts, const Rational& bound) {
  int k = static_cast<int>(face_verts.size());
  LpProblem lp;
  lp.vars = k;
  lp.objective = Vec(k);
  Vec ones(k);
  for (int i = 0; i < k; ++i) ones[i] = 1;
  lp.equal.push_back({std::move(ones), Rational(1)});
  for (int i = 0; i < k; ++i) {
    Vec row(k);
    row[i] = -1;
    lp.less_eq.push_back({std::move(row), Rational(0)});
  }
  for (const Vec& d : space.ball().functionals()) {
    Vec row(k);
    for (int i = 0; i < k; ++i) row[i] = -dot(d, face_verts[static_cast<size_t>(i)]);
    lp.less_eq.push_back({std::move(row), bound - dot(d, y)});
  }
  return solve_lp(lp).status == LpStatus::Optimal;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

PlumpnessReport is_plump_facet(const PolyhedralSpace& space, const Facet& facet) {
  const auto& funcs = space.ball().functionals();
  if (std::find(funcs.begin(), funcs.end(), facet.functional) == funcs.end())
    throw InputError("is_plump_facet: functional is not a facet of this ball");
  PlumpnessReport report;
  report.facet = facet;
  report.plump = true;
  GeneralPolytope face = GeneralPolytope::from_points(space.dim(), facet.vertices);
  for (const Vec& y : space.ball().vertices()) {
    Rational bound = 1 - dot(facet.functional, y);
    VertexRecord rec;
    rec.vertex = y;
    rec.bound = bound;
    if (within_distance(space, y, facet.vertices, bound)) {
      rec.dist = bound;
    } else {
      rec.dist = dist_point_to_polytope(space, y, face).first;
      report.plump = false;
      if (!report.witness || rec.dist - rec.bound > report.witness->dist - report.witness->bound)
        report.witness = rec;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

GlVerdict is_gl(const PolyhedralSpace& space, bool parallel) {
  auto facets = space.ball().facets();
  std::vector<PlumpnessReport> reports(facets.size());
  if (parallel) {
    std::vector<std::future<PlumpnessReport>> jobs;
    jobs.reserve(facets.size());
    for (const Facet& f : facets) {
      jobs.push_back(
          std::async(std::launch::async, [&space, f] { return is_plump_facet(space, f); }));
    }
    for (size_t i = 0; i < jobs.size(); ++i) reports[i] = jobs[i].get();
  } else {
    for (size_t i = 0; i < facets.size(); ++i) reports[i] = is_plump_facet(space, facets[i]);
  }
  GlVerdict verdict;
  for (auto& r : reports) {
    (r.plump ? verdict.plump_facets : verdict.non_plump_facets).push_back(std::move(r));
  }
  verdict.is_gl = verdict.non_plump_facets.empty();
  return verdict;
}

bool difference_body_check(const PolyhedralSpace& space, const Facet& facet) {
  GeneralPolytope face = GeneralPolytope::from_points(space.dim(), facet.vertices);
  return contains(difference_body(face), hyperplane_section(space.ball(), facet.functional));
}

RogersShephardAudit rogers_shephard_audit(const GeneralPolytope& k) {
  linalg::Mat dirs;
  const auto& verts = k.vertices();
  for (size_t i = 1; i < verts.size(); ++i) dirs.push_back(verts[i] - verts[0]);
  int m = linalg::rank(dirs);
  if (m < 1 || m > 3)
    throw InputError("rogers_shephard_audit: affine dimension " + std::to_string(m) +
                     " unsupported");
  RogersShephardAudit audit;
  audit.lhs = volume(difference_body(k));
  audit.rhs = Rational(binomial(2 * m, m)) * volume(k);
  audit.ok = audit.lhs <= audit.rhs;
  return audit;
}

}  // namespace polynorm
