#include "polynorm/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polynorm/errors.hpp"
#include "polynorm/linalg.hpp"
#include "polynorm/lp.hpp"

namespace polynorm {

namespace {

std::vector<Vec> dedupe_sorted(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void check_dims(int dim, const std::vector<Vec>& pts, const char* what) {
  for (const Vec& p : pts) {
    if (p.dim() != dim) throw InputError(std::string(what) + ": dimension mismatch");
  }
}

std::vector<Vec> prune_to_extreme(int dim, std::vector<Vec> pts) {
  pts = dedupe_sorted(std::move(pts));
  std::vector<Vec> extreme;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vec> others;
    others.reserve(pts.size() - 1);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (others.empty() || !in_convex_hull(pts[i], others)) extreme.push_back(pts[i]);
  }
  (void)dim;
  return extreme;
}

bool lex_positive(const Vec& v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) return v[i] > 0;
  }
  return false;
}

}  // namespace

bool in_convex_hull(const Vec& p, const std::vector<Vec>& points) {
  if (points.empty()) return false;
  int n = p.dim();
  int k = static_cast<int>(points.size());
  LpProblem lp;
  lp.vars = k;
  lp.objective = Vec(k);
  for (int c = 0; c < n; ++c) {
    Vec row(k);
    for (int i = 0; i < k; ++i) row[i] = points[static_cast<size_t>(i)][c];
    lp.equal.push_back({std::move(row), p[c]});
  }
  Vec ones(k);
  for (int i = 0; i < k; ++i) ones[i] = 1;
  lp.equal.push_back({std::move(ones), Rational(1)});
  for (int i = 0; i < k; ++i) {
    Vec row(k);
    row[i] = -1;
    lp.less_eq.push_back({std::move(row), Rational(0)});
  }
  return solve_lp(lp).status == LpStatus::Optimal;
}

GeneralPolytope GeneralPolytope::from_points(int dim, std::vector<Vec> points) {
  if (points.empty()) throw InputError("polytope needs at least one point");
  check_dims(dim, points, "from_points");
  return GeneralPolytope(dim, prune_to_extreme(dim, std::move(points)));
}

GeneralPolytope GeneralPolytope::negated() const {
  std::vector<Vec> pts;
  pts.reserve(vertices_.size());
  for (const Vec& v : vertices_) pts.push_back(-v);
  std::sort(pts.begin(), pts.end());
  return GeneralPolytope(dim_, std::move(pts));
}

SymmetricPolytope SymmetricPolytope::from_vertices(int dim, std::vector<Vec> points) {
  if (points.empty()) throw InputError("from_vertices: no points");
  check_dims(dim, points, "from_vertices");
  std::vector<Vec> verts = prune_to_extreme(dim, std::move(points));
  std::set<Vec> vset(verts.begin(), verts.end());
  for (const Vec& v : verts) {
    if (vset.find(-v) == vset.end())
      throw SymmetryError("vertex " + v.str() + " has no antipode");
  }
  if (linalg::rank(verts) != dim)
    throw GeometryError("vertex set is not full-dimensional");
  // Facet functionals are exactly the extreme points of the polar body
  // {d : d·v <= 1 for every vertex v}, which is bounded because the vertex
  // set spans (origin interior by symmetry + full dimension).
  std::vector<Rational> ones(verts.size(), Rational(1));
  std::vector<Vec> funcs = linalg::enumerate_vertices(verts, ones, {}, {}, dim);
  return SymmetricPolytope(dim, std::move(verts), std::move(funcs));
}

SymmetricPolytope SymmetricPolytope::from_halfspaces(int dim, std::vector<Vec> rows) {
  if (rows.empty()) throw InputError("from_halfspaces: no rows");
  check_dims(dim, rows, "from_halfspaces");
  rows = dedupe_sorted(std::move(rows));
  if (linalg::rank(rows) != dim)
    throw GeometryError("halfspace normals do not span: polyhedron unbounded or degenerate");
  // The rank test is conclusive only for symmetric row sets; confirm
  // boundedness exactly with 2*dim LPs before enumerating.
  for (int i = 0; i < dim; ++i) {
    for (int s = -1; s <= 1; s += 2) {
      LpProblem lp;
      lp.vars = dim;
      lp.objective = Vec(dim);
      lp.objective[i] = s;
      for (const Vec& r : rows) lp.less_eq.push_back({r, Rational(1)});
      auto out = solve_lp(lp);
      if (out.status == LpStatus::Unbounded) throw GeometryError("polyhedron is unbounded");
      if (out.status == LpStatus::Infeasible)
        throw GeometryError("halfspaces have empty intersection");
    }
  }
  std::vector<Rational> ones(rows.size(), Rational(1));
  std::vector<Vec> verts = linalg::enumerate_vertices(rows, ones, {}, {}, dim);
  if (verts.empty()) throw GeometryError("halfspaces define an empty or degenerate body");
  return from_vertices(dim, std::move(verts));
}

SymmetricPolytope SymmetricPolytope::polar_dual() const {
  // Polarity swaps the roles exactly for symmetric bodies with 0 interior.
  return SymmetricPolytope(dim_, functionals_, vertices_);
}

std::vector<Facet> SymmetricPolytope::facets() const {
  std::vector<Vec> reps;
  for (const Vec& d : functionals_) {
    if (lex_positive(d)) reps.push_back(d);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<Facet> out;
  for (const Vec& rep : reps) {
    for (const Vec& d : {rep, -rep}) {
      Facet f;
      f.functional = d;
      for (const Vec& v : vertices_) {
        if (dot(d, v) == 1) f.vertices.push_back(v);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

GeneralPolytope SymmetricPolytope::as_general() const {
  return GeneralPolytope::from_points(dim_, vertices_);
}

void SymmetricPolytope::validate() const {
  std::set<Vec> vset(vertices_.begin(), vertices_.end());
  std::set<Vec> fset(functionals_.begin(), functionals_.end());
  for (const Vec& v : vertices_) {
    if (vset.find(-v) == vset.end()) throw SymmetryError("vertex set not symmetric");
  }
  for (const Vec& d : functionals_) {
    if (fset.find(-d) == fset.end()) throw SymmetryError("functional set not symmetric");
  }
  for (const Vec& d : functionals_) {
    std::vector<Vec> tight;
    for (const Vec& v : vertices_) {
      Rational val = dot(d, v);
      if (val > 1) throw GeometryError("vertex outside a facet halfspace");
      if (val == 1) tight.push_back(v);
    }
    // A facet carries >= dim affinely independent vertices; since its
    // hyperplane misses the origin, that is linear independence.
    if (linalg::rank(tight) != dim_) throw GeometryError("functional is not facet-defining");
  }
  for (const Vec& v : vertices_) {
    std::vector<Vec> tight;
    for (const Vec& d : functionals_) {
      if (dot(d, v) == 1) tight.push_back(d);
    }
    if (linalg::rank(tight) != dim_) throw GeometryError("listed point is not a vertex");
  }
}

GeneralPolytope hyperplane_section(const SymmetricPolytope& p, const Vec& d) {
  if (d.dim() != p.dim()) throw InputError("hyperplane_section: dimension mismatch");
  if (d.is_zero()) throw InputError("hyperplane_section: zero functional");
  linalg::Mat basis = linalg::kernel_basis(d);
  int m = static_cast<int>(basis.size());
  linalg::Mat rows;
  std::vector<Rational> bounds;
  for (const Vec& g : p.functionals()) {
    Vec row(m);
    for (int j = 0; j < m; ++j) row[j] = dot(g, basis[static_cast<size_t>(j)]);
    rows.push_back(std::move(row));
    bounds.push_back(1);
  }
  std::vector<Vec> params = linalg::enumerate_vertices(rows, bounds, {}, {}, m);
  std::vector<Vec> pts;
  for (const Vec& t : params) {
    Vec x(p.dim());
    for (int j = 0; j < m; ++j) x = x + basis[static_cast<size_t>(j)] * t[j];
    pts.push_back(std::move(x));
  }
  if (pts.empty()) pts.push_back(Vec(p.dim()));  // the origin always qualifies
  return GeneralPolytope::from_points(p.dim(), std::move(pts));
}

GeneralPolytope minkowski_sum(const GeneralPolytope& a, const GeneralPolytope& b) {
  if (a.dim() != b.dim()) throw InputError("minkowski_sum: dimension mismatch");
  std::vector<Vec> sums;
  for (const Vec& u : a.vertices()) {
    for (const Vec& v : b.vertices()) sums.push_back(u + v);
  }
  return GeneralPolytope::from_points(a.dim(), std::move(sums));
}

GeneralPolytope difference_body(const GeneralPolytope& a) {
  std::vector<Vec> diffs;
  for (const Vec& u : a.vertices()) {
    for (const Vec& v : a.vertices()) diffs.push_back(u - v);
  }
  return GeneralPolytope::from_points(a.dim(), std::move(diffs));
}

namespace {

// Exact angular order around the origin: upper half first, then by cross
// product within a half. Points must have pairwise distinct directions.
bool angular_less(const Vec& a, const Vec& b) {
  auto upper = [](const Vec& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
  bool ua = upper(a), ub = upper(b);
  if (ua != ub) return ua;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

std::vector<Vec> sort_polygon(std::vector<Vec> pts) {
  Vec center(2);
  for (const Vec& p : pts) center = center + p;
  center = center * (Rational(1) / Rational(static_cast<long>(pts.size())));
  std::sort(pts.begin(), pts.end(),
            [&](const Vec& a, const Vec& b) { return angular_less(a - center, b - center); });
  return pts;
}

Rational polygon_area(const std::vector<Vec>& pts) {
  std::vector<Vec> ring = sort_polygon(pts);
  Rational twice = 0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Vec& a = ring[i];
    const Vec& b = ring[(i + 1) % ring.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return rational_abs(twice) / 2;
}

Rational det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Rational volume_3d(const std::vector<Vec>& verts) {
  // Supporting-plane enumeration, then fan triangulation of each facet and
  // signed tetrahedra to the vertex centroid.
  Vec centroid(3);
  for (const Vec& v : verts) centroid = centroid + v;
  centroid = centroid * (Rational(1) / Rational(static_cast<long>(verts.size())));

  std::set<std::vector<Vec>> facet_sets;
  size_t k = verts.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      for (size_t l = j + 1; l < k; ++l) {
        linalg::Mat dirs = {verts[j] - verts[i], verts[l] - verts[i]};
        auto normal = linalg::null_direction(dirs, 3);
        if (!normal) continue;
        Rational c = dot(*normal, verts[i]);
        bool all_le = true, all_ge = true;
        for (const Vec& v : verts) {
          Rational val = dot(*normal, v);
          if (val > c) all_le = false;
          if (val < c) all_ge = false;
        }
        if (!all_le && !all_ge) continue;
        std::vector<Vec> tight;
        for (const Vec& v : verts) {
          if (dot(*normal, v) == c) tight.push_back(v);
        }
        std::sort(tight.begin(), tight.end());
        facet_sets.insert(std::move(tight));
      }
    }
  }
  Rational six_vol = 0;
  for (const auto& fverts : facet_sets) {
    // order the facet polygon in its own plane
    linalg::Mat dirs;
    for (size_t i = 1; i < fverts.size(); ++i) dirs.push_back(fverts[i] - fverts[0]);
    linalg::Mat basis = linalg::span_basis(dirs);
    std::vector<Vec> flat;
    for (const Vec& v : fverts) {
      auto t = linalg::coordinates_in_basis(basis, v - fverts[0]);
      flat.push_back(*t);
    }
    // sort 3D facet vertices along the 2D ring order
    std::vector<size_t> order(fverts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    Vec center(2);
    for (const Vec& p : flat) center = center + p;
    center = center * (Rational(1) / Rational(static_cast<long>(flat.size())));
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return angular_less(flat[a] - center, flat[b] - center);
    });
    for (size_t i = 1; i + 1 < order.size(); ++i) {
      six_vol += rational_abs(det3(fverts[order[0]] - centroid, fverts[order[i]] - centroid,
                                   fverts[order[i + 1]] - centroid));
    }
  }
  return six_vol / 6;
}

}  // namespace

Rational volume(const GeneralPolytope& a) {
  const auto& verts = a.vertices();
  if (verts.size() == 1) return 0;
  linalg::Mat dirs;
  for (size_t i = 1; i < verts.size(); ++i) dirs.push_back(verts[i] - verts[0]);
  int m = linalg::rank(dirs);
  std::vector<Vec> coords;
  if (m == a.dim()) {
    coords = verts;  // Lebesgue volume in ambient coordinates
  } else {
    linalg::Mat basis = linalg::span_basis(dirs);
    for (const Vec& v : verts) coords.push_back(*linalg::coordinates_in_basis(basis, v - verts[0]));
  }
  switch (m) {
    case 1: {
      Rational lo = coords[0][0], hi = coords[0][0];
      for (const Vec& c : coords) {
        if (c[0] < lo) lo = c[0];
        if (c[0] > hi) hi = c[0];
      }
      return hi - lo;
    }
    case 2:
      return polygon_area(coords);
    case 3:
      return volume_3d(coords);
    default:
      throw InputError("volume: affine-hull dimension " + std::to_string(m) + " unsupported");
  }
}

bool contains(const GeneralPolytope& a, const GeneralPolytope& b) {
  if (a.dim() != b.dim()) throw InputError("contains: dimension mismatch");
  for (const Vec& v : b.vertices()) {
    if (!in_convex_hull(v, a.vertices())) return false;
  }
  return true;
}

}  // namespace polynorm
