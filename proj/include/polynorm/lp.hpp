#pragma once

#include <utility>
#include <vector>

#include "polynorm/vec.hpp"

namespace polynorm {

/// Minimize objective·x over free variables x subject to
///   row·x <= bound  for every (row, bound) in less_eq,
///   row·x == bound  for every (row, bound) in equal.
struct LpProblem {
  Vec objective;
  std::vector<std::pair<Vec, Rational>> less_eq;
  std::vector<std::pair<Vec, Rational>> equal;
  int vars = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Exact outcome. The certificate is indexed over less_eq rows followed by
/// equal rows.
///  - Optimal: multipliers y with y <= 0 on inequality rows,
///    sum_i y_i row_i = objective and y·bounds = optimum (strong duality).
///  - Infeasible: Farkas multipliers mu with mu >= 0 on inequality rows,
///    sum_i mu_i row_i = 0 and mu·bounds < 0.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;
  Vec point;
  Vec certificate;
};

/// Exact primal simplex, Bland's rule (lowest index everywhere), two phases.
/// Deterministic: identical input yields a bit-identical outcome.
LpOutcome solve_lp(const LpProblem& problem);

}  // namespace polynorm
