#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polynorm/linalg.hpp"
#include "polynorm/lp.hpp"

using namespace polynorm;

namespace {

Rational Q(long p, long q = 1) { return Rational(p) / Rational(q); }

// Exact residual check: the primal point must satisfy every row and hit the
// reported optimum, and the dual certificate must price out exactly.
void check_optimal(const LpProblem& p, const LpOutcome& out) {
  REQUIRE(out.status == LpStatus::Optimal);
  for (const auto& [row, bound] : p.less_eq) CHECK(dot(row, out.point) <= bound);
  for (const auto& [row, bound] : p.equal) CHECK(dot(row, out.point) == bound);
  CHECK(dot(p.objective, out.point) == out.optimum);
  // strong duality: y^T A = c, y <= 0 on inequalities, y·b = optimum
  Rational dual_value = 0;
  Vec combo(p.vars);
  int idx = 0;
  for (const auto& [row, bound] : p.less_eq) {
    CHECK(out.certificate[idx] <= 0);
    combo = combo + row * out.certificate[idx];
    dual_value += out.certificate[idx] * bound;
    ++idx;
  }
  for (const auto& [row, bound] : p.equal) {
    combo = combo + row * out.certificate[idx];
    dual_value += out.certificate[idx] * bound;
    ++idx;
  }
  CHECK(combo == p.objective);
  CHECK(dual_value == out.optimum);
}

void check_farkas(const LpProblem& p, const LpOutcome& out) {
  REQUIRE(out.status == LpStatus::Infeasible);
  Rational value = 0;
  Vec combo(p.vars);
  int idx = 0;
  for (const auto& [row, bound] : p.less_eq) {
    CHECK(out.certificate[idx] >= 0);
    combo = combo + row * out.certificate[idx];
    value += out.certificate[idx] * bound;
    ++idx;
  }
  for (const auto& [row, bound] : p.equal) {
    combo = combo + row * out.certificate[idx];
    value += out.certificate[idx] * bound;
    ++idx;
  }
  CHECK(combo.is_zero());
  CHECK(value < 0);
}

}  // namespace

TEST_CASE("single bound: minimize x subject to x >= 3/2") {
  LpProblem p;
  p.vars = 1;
  p.objective = Vec{Q(1)};
  p.less_eq.push_back({Vec{Q(-1)}, Q(-3, 2)});
  auto out = solve_lp(p);
  check_optimal(p, out);
  CHECK(out.optimum == Q(3, 2));
  CHECK(out.point == Vec{Q(3, 2)});
}

TEST_CASE("contradictory bounds give Farkas certificate (1,1)") {
  LpProblem p;
  p.vars = 1;
  p.objective = Vec{Q(0)};
  p.less_eq.push_back({Vec{Q(1)}, Q(-1)});   // x <= -1
  p.less_eq.push_back({Vec{Q(-1)}, Q(-1)});  // -x <= -1
  auto out = solve_lp(p);
  check_farkas(p, out);
  CHECK(out.certificate == Vec{Q(1), Q(1)});
}

TEST_CASE("hexagon face distance LP has optimum 1") {
  // dist(x_1, Face(f_2)) for the lambda-hexagon encoded directly as an LP:
  // variables (y1, y2, t, alpha); y = convex combination of (1/2,1), (-1/2,1)
  // written with a single combination parameter alpha in [0,1];
  // hexagon norm rows max over functionals (1,1/2),(1,-1/2),(0,1) applied to
  // (1,0) - y, each bounded by t.
  LpProblem p;
  p.vars = 4;  // y1, y2, t, alpha
  p.objective = Vec{Q(0), Q(0), Q(1), Q(0)};
  // y = alpha*(1/2,1) + (1-alpha)*(-1/2,1):  y1 = alpha - 1/2, y2 = 1
  p.equal.push_back({Vec{Q(1), Q(0), Q(0), Q(-1)}, Q(-1, 2)});
  p.equal.push_back({Vec{Q(0), Q(1), Q(0), Q(0)}, Q(1)});
  p.less_eq.push_back({Vec{Q(0), Q(0), Q(0), Q(1)}, Q(1)});
  p.less_eq.push_back({Vec{Q(0), Q(0), Q(0), Q(-1)}, Q(0)});
  Vec target{Q(1), Q(0)};
  std::vector<Vec> funcs = {Vec{Q(1), Q(1, 2)}, Vec{Q(1), Q(-1, 2)}, Vec{Q(0), Q(1)}};
  for (const auto& d : funcs) {
    // d·(target - y) <= t and -d·(target - y) <= t
    p.less_eq.push_back({Vec{-d[0], -d[1], Q(-1), Q(0)}, -dot(d, target)});
    p.less_eq.push_back({Vec{d[0], d[1], Q(-1), Q(0)}, dot(d, target)});
  }
  auto out = solve_lp(p);
  check_optimal(p, out);
  CHECK(out.optimum == Q(1));
}

TEST_CASE("unbounded problem is reported") {
  LpProblem p;
  p.vars = 2;
  p.objective = Vec{Q(1), Q(0)};
  p.less_eq.push_back({Vec{Q(1), Q(0)}, Q(5)});
  auto out = solve_lp(p);
  CHECK(out.status == LpStatus::Unbounded);
}

TEST_CASE("dimension mismatch is an input error") {
  LpProblem p;
  p.vars = 2;
  p.objective = Vec{Q(1), Q(0)};
  p.less_eq.push_back({Vec{Q(1)}, Q(5)});
  CHECK_THROWS_AS(solve_lp(p), InputError);
}

TEST_CASE("determinism: repeated solves agree bit for bit") {
  LpProblem p;
  p.vars = 2;
  p.objective = Vec{Q(1), Q(1)};
  p.less_eq.push_back({Vec{Q(-1), Q(0)}, Q(0)});
  p.less_eq.push_back({Vec{Q(0), Q(-1)}, Q(0)});
  p.less_eq.push_back({Vec{Q(-1), Q(-2)}, Q(-2)});
  p.less_eq.push_back({Vec{Q(-3), Q(-1)}, Q(-3)});
  auto a = solve_lp(p);
  auto b = solve_lp(p);
  check_optimal(p, a);
  CHECK(a.status == b.status);
  CHECK(a.optimum == b.optimum);
  CHECK(a.point == b.point);
  CHECK(a.certificate == b.certificate);
}

TEST_CASE("random bounded LPs agree with vertex-enumeration oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 2);
    LpProblem p;
    p.vars = n;
    Vec c(n);
    for (int i = 0; i < n; ++i) c[i] = Q(coef(rng), den(rng));
    p.objective = c;
    // box keeps the region bounded, plus a few random cuts
    for (int i = 0; i < n; ++i) {
      Vec e(n), me(n);
      e[i] = Q(1);
      me[i] = Q(-1);
      p.less_eq.push_back({e, Q(3)});
      p.less_eq.push_back({me, Q(3)});
    }
    for (int k = 0; k < 3; ++k) {
      Vec row(n);
      for (int i = 0; i < n; ++i) row[i] = Q(coef(rng), den(rng));
      p.less_eq.push_back({row, Q(coef(rng), 1)});
    }
    auto out = solve_lp(p);
    linalg::Mat A;
    std::vector<Rational> b;
    for (const auto& [row, bound] : p.less_eq) {
      A.push_back(row);
      b.push_back(bound);
    }
    auto verts = linalg::enumerate_vertices(A, b, {}, {}, n);
    if (verts.empty()) {
      // empty or (for these boxes) never unbounded; region may be empty
      CHECK(out.status == LpStatus::Infeasible);
      check_farkas(p, out);
    } else {
      REQUIRE(out.status == LpStatus::Optimal);
      check_optimal(p, out);
      Rational best = dot(c, verts[0]);
      for (const auto& v : verts) {
        Rational val = dot(c, v);
        if (val < best) best = val;
      }
      CHECK(out.optimum == best);
    }
  }
}
