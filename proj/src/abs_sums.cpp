#include "polynorm/abs_sums.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "polynorm/errors.hpp"
#include "polynorm/gl.hpp"
#include "polynorm/linalg.hpp"
#include "polynorm/lp.hpp"

namespace polynorm {

namespace {

Vec vec_abs(const Vec& v) {
  Vec out(v.dim());
  for (int k = 0; k < v.dim(); ++k) out[k] = rational_abs(v[k]);
  return out;
}

Vec basis_vector(int dim, int k) {
  Vec e(dim);
  e[k] = 1;
  return e;
}

Vec flip_coordinate(const Vec& v, int k) {
  Vec out = v;
  out[k] = -out[k];
  return out;
}

bool flip_closed(const std::vector<Vec>& sorted_set, int k) {
  std::vector<Vec> flipped;
  flipped.reserve(sorted_set.size());
  for (const Vec& v : sorted_set) flipped.push_back(flip_coordinate(v, k));
  std::sort(flipped.begin(), flipped.end());
  return flipped == sorted_set;
}

std::vector<int> support_of(const Vec& d) {
  std::vector<int> out;
  for (int k = 0; k < d.dim(); ++k)
    if (d[k] != 0) out.push_back(k);
  return out;
}

// Feasibility of the existential b-system of the monotone-plump definition:
// b in B_E, d*(b) = 1, b_k >= a_k on the support, and b - z in the cone over
// Face(d*) (mu >= 0 combination), which encodes ||b - z|| = 1 - d*(z).
bool b_system_feasible(const AbsoluteNormSpace& e, const Vec& d, const std::vector<int>& support,
                       const std::vector<Vec>& face, const Vec& a, const Vec& z) {
  int n = e.n;
  int m = static_cast<int>(face.size());
  int vars = n + m;  // b, mu
  LpProblem lp;
  lp.vars = vars;
  lp.objective = Vec(vars);
  for (const Vec& g : e.space.ball().functionals()) {
    Vec row(vars);
    for (int k = 0; k < n; ++k) row[k] = g[k];
    lp.less_eq.push_back({std::move(row), Rational(1)});
  }
  for (int k : support) {
    Vec row(vars);
    row[k] = -1;
    lp.less_eq.push_back({std::move(row), -a[k]});
  }
  for (int j = 0; j < m; ++j) {
    Vec row(vars);
    row[n + j] = -1;
    lp.less_eq.push_back({std::move(row), Rational(0)});
  }
  {
    Vec row(vars);
    for (int k = 0; k < n; ++k) row[k] = d[k];
    lp.equal.push_back({std::move(row), Rational(1)});
  }
  for (int k = 0; k < n; ++k) {
    Vec row(vars);
    row[k] = 1;
    for (int j = 0; j < m; ++j) row[n + j] = -face[static_cast<size_t>(j)][k];
    lp.equal.push_back({std::move(row), z[k]});
  }
  return solve_lp(lp).status == LpStatus::Optimal;
}

std::vector<Vec> face_vertices(const AbsoluteNormSpace& e, const Vec& d) {
  std::vector<Vec> face;
  for (const Vec& v : e.space.ball().vertices())
    if (dot(d, v) == 1) face.push_back(v);
  return face;
}

Rational unit_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 8);
  return Rational(num(rng)) / 8;
}

}  // namespace

AbsoluteNormSpace validate_absolute(const SymmetricPolytope& p) {
  PolyhedralSpace space(p);
  int n = p.dim();
  for (int k = 0; k < n; ++k) {
    if (space.norm(basis_vector(n, k)) != 1)
      throw NotAbsoluteError("basis vector e_" + std::to_string(k + 1) + " has norm " +
                             to_string(space.norm(basis_vector(n, k))));
  }
  for (int k = 0; k < n; ++k) {
    if (!flip_closed(p.vertices(), k))
      throw NotAbsoluteError("vertex set not closed under flipping coordinate " +
                             std::to_string(k + 1));
    if (!flip_closed(p.functionals(), k))
      throw NotAbsoluteError("functional set not closed under flipping coordinate " +
                             std::to_string(k + 1));
  }
  // monotonicity consequence, probed on seeded rational pairs 0 <= a <= b
  std::mt19937_64 rng(7);
  for (int probe = 0; probe < 10; ++probe) {
    Vec a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = unit_rational(rng);
      b[k] = a[k] + unit_rational(rng);
    }
    if (space.norm(a) > space.norm(b))
      throw NotAbsoluteError("norm not monotone at a=" + a.str() + " b=" + b.str());
  }
  return {std::move(space), n};
}

FunctionalResult is_monotone_plump(const AbsoluteNormSpace& e, const Vec& dual) {
  if (dual.dim() != e.n) throw InputError("is_monotone_plump: dimension mismatch");
  Vec d = vec_abs(dual);
  const auto& duals = e.space.ball().functionals();
  if (std::find(duals.begin(), duals.end(), d) == duals.end())
    throw InputError("is_monotone_plump: " + dual.str() + " is not an extreme dual point");
  FunctionalResult result;
  result.dual = d;
  result.support = support_of(d);
  result.prefilter_pass = true;
  for (int k : result.support)
    if (d[k] != 1) result.prefilter_pass = false;
  auto face = face_vertices(e, d);
  int n = e.n;
  result.monotone_plump = true;
  for (const auto& facet : e.space.ball().facets()) {
    // parameter polytope over (a, z): a in the facet, a >= 0, z in B_E,
    // 0 <= z_k <= a_k on the support
    linalg::Mat A;
    std::vector<Rational> rhs;
    auto push = [&](Vec row, Rational bound) {
      A.push_back(std::move(row));
      rhs.push_back(std::move(bound));
    };
    for (const Vec& g : e.space.ball().functionals()) {
      Vec ra(2 * n), rz(2 * n);
      for (int k = 0; k < n; ++k) {
        ra[k] = g[k];
        rz[n + k] = g[k];
      }
      push(std::move(ra), Rational(1));
      push(std::move(rz), Rational(1));
    }
    for (int k = 0; k < n; ++k) {
      Vec row(2 * n);
      row[k] = -1;
      push(std::move(row), Rational(0));
    }
    for (int k : result.support) {
      Vec lo(2 * n), hi(2 * n);
      lo[n + k] = -1;
      push(std::move(lo), Rational(0));
      hi[n + k] = 1;
      hi[k] = -1;
      push(std::move(hi), Rational(0));
    }
    linalg::Mat Aeq;
    Vec eq(2 * n);
    for (int k = 0; k < n; ++k) eq[k] = facet.functional[k];
    Aeq.push_back(std::move(eq));
    auto corners = linalg::enumerate_vertices(A, rhs, Aeq, {Rational(1)}, 2 * n);
    for (const Vec& corner : corners) {
      Vec a(n), z(n);
      for (int k = 0; k < n; ++k) {
        a[k] = corner[k];
        z[k] = corner[n + k];
      }
      if (!b_system_feasible(e, d, result.support, face, a, z)) {
        result.monotone_plump = false;
        result.counterexample = std::make_pair(a, z);
        break;
      }
    }
    if (!result.monotone_plump) break;
  }
  // the coordinate condition is necessary, so a prefilter failure without a
  // concrete counterexample would contradict it
  if (!result.prefilter_pass && result.monotone_plump)
    throw TheoremViolation("prefilter rejected " + d.str() +
                           " but the full procedure found no counterexample");
  return result;
}

GlmVerdict is_glm(const AbsoluteNormSpace& e) {
  std::set<Vec> reduced;
  for (const Vec& d : e.space.ball().functionals()) reduced.insert(vec_abs(d));
  GlmVerdict verdict;
  verdict.is_glm = true;
  for (const Vec& d : reduced) {
    verdict.results.push_back(is_monotone_plump(e, d));
    if (!verdict.results.back().monotone_plump) verdict.is_glm = false;
  }
  return verdict;
}

bool is_gl_respecting(const AbsoluteNormSpace& e) { return is_glm(e).is_glm; }

bool extended_z_probe(const AbsoluteNormSpace& e, const Vec& dual, int samples,
                      std::uint64_t seed) {
  Vec d = vec_abs(dual);
  auto support = support_of(d);
  auto face = face_vertices(e, d);
  std::set<int> in_support(support.begin(), support.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sign(0, 1);
  int n = e.n;
  for (int i = 0; i < samples; ++i) {
    Vec a(n);
    for (int k = 0; k < n; ++k) a[k] = unit_rational(rng) + Rational(1, 8);
    Rational na = e.space.norm(a);
    for (int k = 0; k < n; ++k) a[k] = a[k] / na;  // nonnegative sphere point
    Vec z(n);
    for (int k = 0; k < n; ++k) {
      Rational mag = in_support.count(k) ? a[k] * unit_rational(rng) : unit_rational(rng);
      z[k] = sign(rng) ? mag : -mag;
    }
    Rational nz = e.space.norm(z);
    if (nz > 1) {
      for (int k = 0; k < n; ++k) z[k] = z[k] / nz;  // shrinking preserves |z_k| <= a_k
    }
    if (!b_system_feasible(e, d, support, face, a, z)) return false;
  }
  return true;
}

SumSpace build_e_sum(const AbsoluteNormSpace& e,
                     const std::vector<PolyhedralSpace>& components) {
  if (static_cast<int>(components.size()) != e.n)
    throw InputError("build_e_sum: component count must equal the outer dimension");
  if (e.n > 3) throw InputError("build_e_sum: outer dimension limited to 3");
  int total = 0;
  for (const auto& x : components) {
    if (x.dim() > 2) throw InputError("build_e_sum: component dimension limited to 2");
    total += x.dim();
  }
  if (total > 4) throw InputError("build_e_sum: sum dimension limited to 4");
  std::set<Vec> rows;
  for (const Vec& d : e.space.ball().functionals()) {
    bool nonneg = true;
    for (int k = 0; k < e.n; ++k)
      if (d[k] < 0) nonneg = false;
    if (!nonneg) continue;  // dominated by |d|, also an extreme dual point
    // cartesian product of component dual vertices
    std::vector<size_t> pick(components.size(), 0);
    while (true) {
      Vec row(total);
      int at = 0;
      for (int k = 0; k < e.n; ++k) {
        const Vec& g = components[static_cast<size_t>(k)].ball().functionals()[pick[k]];
        for (int j = 0; j < g.dim(); ++j) row[at + j] = d[k] * g[j];
        at += g.dim();
      }
      rows.insert(std::move(row));
      int k = 0;
      while (k < e.n &&
             ++pick[k] == components[static_cast<size_t>(k)].ball().functionals().size()) {
        pick[k] = 0;
        ++k;
      }
      if (k == e.n) break;
    }
  }
  auto ball = SymmetricPolytope::from_halfspaces(
      total, std::vector<Vec>(rows.begin(), rows.end()));
  SumSpace sum{e, components, PolyhedralSpace(std::move(ball))};
  // the sum norm must factor through the component norms exactly
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-8, 8);
  for (int probe = 0; probe < 20; ++probe) {
    Vec x(total);
    for (int j = 0; j < total; ++j) x[j] = Rational(num(rng)) / 4;
    Vec norms(e.n);
    int at = 0;
    for (int k = 0; k < e.n; ++k) {
      const auto& comp = components[static_cast<size_t>(k)];
      Vec xk(comp.dim());
      for (int j = 0; j < comp.dim(); ++j) xk[j] = x[at + j];
      norms[k] = comp.norm(xk);
      at += comp.dim();
    }
    if (sum.space.norm(x) != e.space.norm(norms))
      throw TheoremViolation("sum norm disagrees with E applied to component norms at " + x.str());
  }
  return sum;
}

Facet compose_sum_face(const AbsoluteNormSpace& e,
                       const std::vector<PolyhedralSpace>& components, const Vec& dual,
                       const std::vector<Vec>& component_functionals) {
  auto fr = is_monotone_plump(e, dual);
  if (!fr.monotone_plump)
    throw InputError("compose_sum_face: " + dual.str() + " is not monotone plump");
  if (component_functionals.size() != fr.support.size())
    throw InputError("compose_sum_face: one component functional per support coordinate");
  for (size_t i = 0; i < fr.support.size(); ++i) {
    const auto& comp = components[static_cast<size_t>(fr.support[i])];
    const auto facets = comp.ball().facets();
    auto it = std::find_if(facets.begin(), facets.end(), [&](const Facet& f) {
      return f.functional == component_functionals[i];
    });
    if (it == facets.end())
      throw InputError("compose_sum_face: " + component_functionals[i].str() +
                       " is not a facet functional of component " +
                       std::to_string(fr.support[i] + 1));
    if (!is_plump_facet(comp, *it).plump)
      throw InputError("compose_sum_face: component facet " + component_functionals[i].str() +
                       " is not plump");
  }
  auto sum = build_e_sum(e, components);
  Vec composite(sum.space.dim());
  int at = 0;
  size_t next = 0;
  for (int k = 0; k < e.n; ++k) {
    int dk = components[static_cast<size_t>(k)].dim();
    if (next < fr.support.size() && fr.support[next] == k) {
      for (int j = 0; j < dk; ++j) composite[at + j] = fr.dual[k] * component_functionals[next][j];
      ++next;
    }
    at += dk;
  }
  auto facets = sum.space.ball().facets();
  auto it = std::find_if(facets.begin(), facets.end(),
                         [&](const Facet& f) { return f.functional == composite; });
  if (it == facets.end())
    throw TheoremViolation("composite functional " + composite.str() +
                           " is not a facet of the sum ball");
  if (!is_plump_facet(sum.space, *it).plump)
    throw TheoremViolation("composite facet " + composite.str() + " is not plump in the sum");
  return *it;
}

CrossValidation cross_validate(const AbsoluteNormSpace& e,
                               const std::vector<PolyhedralSpace>& components) {
  for (size_t k = 0; k < components.size(); ++k) {
    if (!is_gl(components[k]).is_gl)
      throw InputError("cross_validate: component " + std::to_string(k + 1) + " is not GL");
  }
  CrossValidation cv;
  cv.glm = is_glm(e).is_glm;
  cv.sum_gl = is_gl(build_e_sum(e, components).space).is_gl;
  cv.agree = cv.glm == cv.sum_gl;
  if (!cv.agree)
    throw TheoremViolation("GLM verdict and sum GL verdict disagree");
  return cv;
}

}  // namespace polynorm
