#include "polynorm/lp.hpp"

#include <vector>

#include "polynorm/errors.hpp"

namespace polynorm {

namespace {

// Dense exact tableau. Columns: x+ (n), x- (n), slacks (one per inequality),
// artificials (one per row; pure basis trackers once expelled, never allowed
// to re-enter, so the artificial block stays equal to B^{-1} and dual
// multipliers can be read off it).
class Tableau {
 public:
  Tableau(const LpProblem& p) {
    n_ = p.vars;
    mi_ = static_cast<int>(p.less_eq.size());
    m_ = mi_ + static_cast<int>(p.equal.size());
    slack0_ = 2 * n_;
    art0_ = slack0_ + mi_;
    ncols_ = art0_ + m_;
    T_.assign(static_cast<size_t>(m_), std::vector<Rational>(static_cast<size_t>(ncols_)));
    rhs_.resize(static_cast<size_t>(m_));
    flip_.assign(static_cast<size_t>(m_), 1);
    basis_.resize(static_cast<size_t>(m_));

    for (int i = 0; i < m_; ++i) {
      const auto& [row, bound] = i < mi_ ? p.less_eq[static_cast<size_t>(i)]
                                         : p.equal[static_cast<size_t>(i - mi_)];
      if (row.dim() != n_) throw InputError("lp row dimension mismatch");
      bool neg = bound < 0;
      if (neg) flip_[static_cast<size_t>(i)] = -1;
      Rational s = neg ? Rational(-1) : Rational(1);
      auto& t = T_[static_cast<size_t>(i)];
      for (int j = 0; j < n_; ++j) {
        t[static_cast<size_t>(j)] = s * row[j];
        t[static_cast<size_t>(n_ + j)] = -s * row[j];
      }
      if (i < mi_) t[static_cast<size_t>(slack0_ + i)] = s;
      t[static_cast<size_t>(art0_ + i)] = 1;
      rhs_[static_cast<size_t>(i)] = s * bound;
      // Slack starts basic only when its column is +1 with nonnegative rhs.
      basis_[static_cast<size_t>(i)] = (i < mi_ && !neg) ? slack0_ + i : art0_ + i;
    }
  }

  // Runs one simplex phase with Bland's rule on the given column costs.
  // Returns false when an entering column certifies unboundedness.
  bool run_phase(const std::vector<Rational>& cost) {
    std::vector<Rational> red(static_cast<size_t>(ncols_));
    for (int j = 0; j < ncols_; ++j) {
      Rational z = 0;
      for (int i = 0; i < m_; ++i) {
        const Rational& cb = cost[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
        if (cb != 0 && T_[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
          z += cb * T_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
      red[static_cast<size_t>(j)] = cost[static_cast<size_t>(j)] - z;
    }
    for (;;) {
      int jc = -1;
      for (int j = 0; j < art0_; ++j) {  // artificials never enter
        if (red[static_cast<size_t>(j)] < 0) {
          jc = j;
          break;
        }
      }
      if (jc < 0) return true;
      int r = -1;
      Rational best_num, best_den;
      for (int i = 0; i < m_; ++i) {
        const Rational& a = T_[static_cast<size_t>(i)][static_cast<size_t>(jc)];
        if (a <= 0) continue;
        // compare rhs_[i]/a with best_num/best_den without division
        if (r < 0 || rhs_[static_cast<size_t>(i)] * best_den < best_num * a ||
            (rhs_[static_cast<size_t>(i)] * best_den == best_num * a &&
             basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(r)])) {
          r = i;
          best_num = rhs_[static_cast<size_t>(i)];
          best_den = a;
        }
      }
      if (r < 0) return false;
      pivot(r, jc, &red);
    }
  }

  void pivot(int r, int jc, std::vector<Rational>* red) {
    auto& prow = T_[static_cast<size_t>(r)];
    Rational piv = prow[static_cast<size_t>(jc)];
    std::vector<int> nz;
    for (int j = 0; j < ncols_; ++j) {
      if (prow[static_cast<size_t>(j)] != 0) {
        prow[static_cast<size_t>(j)] /= piv;
        nz.push_back(j);
      }
    }
    rhs_[static_cast<size_t>(r)] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rational f = T_[static_cast<size_t>(i)][static_cast<size_t>(jc)];
      if (f == 0) continue;
      auto& row = T_[static_cast<size_t>(i)];
      for (int j : nz) row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
      rhs_[static_cast<size_t>(i)] -= f * rhs_[static_cast<size_t>(r)];
    }
    if (red != nullptr) {
      Rational f = (*red)[static_cast<size_t>(jc)];
      if (f != 0) {
        for (int j : nz) (*red)[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
      }
    }
    basis_[static_cast<size_t>(r)] = jc;
  }

  // Pivots basic artificials onto any available real column (degenerate, rhs
  // is zero after a feasible phase 1). Rows with no real entry are redundant
  // constraints and stay parked on their artificial at value zero.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<size_t>(i)] < art0_) continue;
      for (int j = 0; j < art0_; ++j) {
        if (T_[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
          pivot(i, j, nullptr);
          break;
        }
      }
    }
  }

  Rational phase_value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
      if (cb != 0) v += cb * rhs_[static_cast<size_t>(i)];
    }
    return v;
  }

  std::vector<Rational> phase1_cost() const {
    std::vector<Rational> c(static_cast<size_t>(ncols_));
    for (int i = 0; i < m_; ++i) c[static_cast<size_t>(art0_ + i)] = 1;
    return c;
  }

  std::vector<Rational> phase2_cost(const Vec& objective) const {
    std::vector<Rational> c(static_cast<size_t>(ncols_));
    for (int j = 0; j < n_; ++j) {
      c[static_cast<size_t>(j)] = objective[j];
      c[static_cast<size_t>(n_ + j)] = -objective[j];
    }
    return c;
  }

  Vec primal_point() const {
    Vec x(n_);
    for (int i = 0; i < m_; ++i) {
      int b = basis_[static_cast<size_t>(i)];
      if (b < n_)
        x[b] += rhs_[static_cast<size_t>(i)];
      else if (b < 2 * n_)
        x[b - n_] -= rhs_[static_cast<size_t>(i)];
    }
    return x;
  }

  // y_i = c_B^T B^{-1} e_i, read off the artificial block, then mapped back
  // through the row sign flips to multipliers on the original rows.
  Vec dual_multipliers(const std::vector<Rational>& cost, int sign) const {
    Vec y(m_);
    for (int i = 0; i < m_; ++i) {
      Rational v = 0;
      for (int k = 0; k < m_; ++k) {
        const Rational& cb = cost[static_cast<size_t>(basis_[static_cast<size_t>(k)])];
        if (cb != 0 && T_[static_cast<size_t>(k)][static_cast<size_t>(art0_ + i)] != 0)
          v += cb * T_[static_cast<size_t>(k)][static_cast<size_t>(art0_ + i)];
      }
      y[i] = Rational(sign * flip_[static_cast<size_t>(i)]) * v;
    }
    return y;
  }

 private:
  int n_, mi_, m_, slack0_, art0_, ncols_;
  std::vector<std::vector<Rational>> T_;
  std::vector<Rational> rhs_;
  std::vector<int> flip_;
  std::vector<int> basis_;
};

}  // namespace

LpOutcome solve_lp(const LpProblem& problem) {
  if (problem.vars <= 0) throw InputError("lp needs at least one variable");
  if (problem.objective.dim() != problem.vars) throw InputError("lp objective dimension mismatch");

  Tableau t(problem);
  auto c1 = t.phase1_cost();
  t.run_phase(c1);  // bounded below by zero, cannot report unbounded
  LpOutcome out;
  if (t.phase_value(c1) > 0) {
    out.status = LpStatus::Infeasible;
    out.certificate = t.dual_multipliers(c1, -1);
    return out;
  }
  t.drive_out_artificials();
  auto c2 = t.phase2_cost(problem.objective);
  if (!t.run_phase(c2)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.point = t.primal_point();
  out.optimum = dot(problem.objective, out.point);
  out.certificate = t.dual_multipliers(c2, 1);
  return out;
}

}  // namespace polynorm
