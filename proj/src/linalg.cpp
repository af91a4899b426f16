#include "polynorm/linalg.hpp"

#include <algorithm>
#include <set>

#include "polynorm/errors.hpp"

namespace polynorm::linalg {

namespace {

// Augmented row: dim coefficient entries followed by one rhs entry.
// Pivot rows are normalized to leading coefficient 1 and reduced against
// earlier pivots only (forward elimination); back-substitution finishes.
struct Elim {
  int dim;
  std::vector<int> pivot_cols;
  std::vector<std::vector<Rational>> rows;  // parallel to pivot_cols

  enum class Add { Pivot, Dependent, Conflict };

  Add add(const Vec& normal, const Rational& rhs) {
    std::vector<Rational> r(static_cast<size_t>(dim) + 1);
    for (int i = 0; i < dim; ++i) r[static_cast<size_t>(i)] = normal[i];
    r[static_cast<size_t>(dim)] = rhs;
    for (size_t k = 0; k < rows.size(); ++k) {
      const Rational& f = r[static_cast<size_t>(pivot_cols[k])];
      if (f == 0) continue;
      Rational factor = f;  // pivot rows are normalized
      for (int j = pivot_cols[k]; j <= dim; ++j) {
        if (rows[k][static_cast<size_t>(j)] != 0)
          r[static_cast<size_t>(j)] -= factor * rows[k][static_cast<size_t>(j)];
      }
    }
    int lead = -1;
    for (int j = 0; j < dim; ++j) {
      if (r[static_cast<size_t>(j)] != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0) return r[static_cast<size_t>(dim)] == 0 ? Add::Dependent : Add::Conflict;
    Rational inv = r[static_cast<size_t>(lead)];
    for (int j = lead; j <= dim; ++j) r[static_cast<size_t>(j)] /= inv;
    pivot_cols.push_back(lead);
    rows.push_back(std::move(r));
    return Add::Pivot;
  }

  void pop() {
    pivot_cols.pop_back();
    rows.pop_back();
  }

  int rank() const { return static_cast<int>(rows.size()); }

  // Requires rank == dim: every column is some pivot's leading column.
  Vec solve() const {
    Vec x(dim);
    std::vector<size_t> order(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_cols[a] > pivot_cols[b]; });
    for (size_t i : order) {
      int c = pivot_cols[i];
      Rational v = rows[i][static_cast<size_t>(dim)];
      for (int j = c + 1; j < dim; ++j) {
        if (rows[i][static_cast<size_t>(j)] != 0) v -= rows[i][static_cast<size_t>(j)] * x[j];
      }
      x[c] = v;
    }
    return x;
  }
};

}  // namespace

std::optional<Vec> solve_square(const Mat& rows, const std::vector<Rational>& rhs) {
  if (rows.empty()) return std::nullopt;
  int d = rows[0].dim();
  Elim e{d, {}, {}};
  for (size_t i = 0; i < rows.size(); ++i) {
    if (e.add(rows[i], rhs[i]) == Elim::Add::Conflict) return std::nullopt;
  }
  if (e.rank() != d) return std::nullopt;
  return e.solve();
}

int rank(const Mat& rows) {
  if (rows.empty()) return 0;
  Elim e{rows[0].dim(), {}, {}};
  for (const Vec& r : rows) e.add(r, 0);
  return e.rank();
}

std::optional<Vec> null_direction(const Mat& rows, int dim) {
  Elim e{dim, {}, {}};
  for (const Vec& r : rows) e.add(r, 0);
  if (e.rank() != dim - 1) return std::nullopt;
  int free_col = -1;
  for (int j = 0; j < dim; ++j) {
    if (std::find(e.pivot_cols.begin(), e.pivot_cols.end(), j) == e.pivot_cols.end()) {
      free_col = j;
      break;
    }
  }
  Vec x(dim);
  x[free_col] = 1;
  std::vector<size_t> order(e.rows.size());
  for (size_t i = 0; i < e.rows.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return e.pivot_cols[a] > e.pivot_cols[b]; });
  for (size_t i : order) {
    int c = e.pivot_cols[i];
    Rational v = 0;
    for (int j = c + 1; j < dim; ++j) {
      if (e.rows[i][static_cast<size_t>(j)] != 0) v -= e.rows[i][static_cast<size_t>(j)] * x[j];
    }
    x[c] = v;
  }
  return x;
}

Mat kernel_basis(const Vec& d) {
  int n = d.dim();
  int p = -1;
  for (int i = 0; i < n; ++i) {
    if (d[i] != 0) {
      p = i;
      break;
    }
  }
  if (p < 0) throw InputError("kernel_basis: zero functional");
  Mat basis;
  for (int j = 0; j < n; ++j) {
    if (j == p) continue;
    Vec b(n);
    b[j] = 1;
    b[p] = -d[j] / d[p];
    basis.push_back(std::move(b));
  }
  return basis;
}

Mat span_basis(const Mat& rows) {
  if (rows.empty()) return {};
  Elim e{rows[0].dim(), {}, {}};
  Mat basis;
  for (const Vec& r : rows) {
    if (e.add(r, 0) == Elim::Add::Pivot) {
      Vec b(e.dim);
      const auto& row = e.rows.back();
      for (int j = 0; j < e.dim; ++j) b[j] = row[static_cast<size_t>(j)];
      basis.push_back(std::move(b));
    }
  }
  return basis;
}

std::optional<Vec> coordinates_in_basis(const Mat& basis, const Vec& w) {
  // Echelon basis rows have distinct leading columns with coefficient 1.
  Vec rem = w;
  Vec t(static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) {
    int lead = -1;
    for (int j = 0; j < basis[k].dim(); ++j) {
      if (basis[k][j] != 0) {
        lead = j;
        break;
      }
    }
    Rational coef = rem[lead] / basis[k][lead];
    t[static_cast<int>(k)] = coef;
    if (coef != 0) rem = rem - basis[k] * coef;
  }
  if (!rem.is_zero()) return std::nullopt;
  return t;
}

namespace {

void enumerate_rec(Elim& e, const Mat& A, const std::vector<Rational>& b, size_t next,
                   std::set<Vec>& out) {
  int d = e.dim;
  if (e.rank() == d) {
    Vec x = e.solve();
    for (size_t i = 0; i < A.size(); ++i) {
      if (dot(A[i], x) > b[i]) return;
    }
    out.insert(std::move(x));
    return;
  }
  int missing = d - e.rank();
  for (size_t i = next; i + static_cast<size_t>(missing) <= A.size(); ++i) {
    auto kind = e.add(A[i], b[i]);
    if (kind == Elim::Add::Pivot) {
      enumerate_rec(e, A, b, i + 1, out);
      e.pop();
    }
    // Dependent or Conflict rows are skipped as chosen tight rows; any vertex
    // has a linearly independent tight subset, so completeness is preserved.
  }
}

}  // namespace

std::vector<Vec> enumerate_vertices(const Mat& A, const std::vector<Rational>& b, const Mat& Aeq,
                                    const std::vector<Rational>& beq, int dim) {
  Elim e{dim, {}, {}};
  for (size_t i = 0; i < Aeq.size(); ++i) {
    if (e.add(Aeq[i], beq[i]) == Elim::Add::Conflict) return {};
  }
  std::set<Vec> out;
  if (e.rank() == dim) {
    Vec x = e.solve();
    bool ok = true;
    for (size_t i = 0; i < A.size() && ok; ++i) ok = dot(A[i], x) <= b[i];
    if (ok) out.insert(std::move(x));
  } else {
    enumerate_rec(e, A, b, 0, out);
  }
  // Equality feasibility for the pre-solved branch is rechecked here too: any
  // equality conflict already returned, dependent equalities hold by solve.
  std::vector<Vec> verts(out.begin(), out.end());
  return verts;
}

}  // namespace polynorm::linalg
