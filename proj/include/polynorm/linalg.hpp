#pragma once

#include <optional>
#include <vector>

#include "polynorm/vec.hpp"

namespace polynorm::linalg {

using Mat = std::vector<Vec>;

/// Solves M x = rhs for a square system given by rows. Empty on singular M.
std::optional<Vec> solve_square(const Mat& rows, const std::vector<Rational>& rhs);

int rank(const Mat& rows);

/// A nonzero vector orthogonal to every row, when the null space is exactly
/// one-dimensional; empty otherwise. dim is the ambient dimension.
std::optional<Vec> null_direction(const Mat& rows, int dim);

/// Rational basis of ker(d) for a nonzero functional d (dim-1 vectors).
Mat kernel_basis(const Vec& d);

/// Echelon basis of span(rows); each basis row keeps its pivot column usable
/// for exact coordinate extraction via coordinates_in_basis.
Mat span_basis(const Mat& rows);

/// Coordinates of w in the span of an echelon basis from span_basis.
/// Empty when w lies outside the span.
std::optional<Vec> coordinates_in_basis(const Mat& basis, const Vec& w);

/// All vertices of {x : A x <= b, Aeq x = beq}, by exhaustive enumeration of
/// linearly independent tight sets (incremental elimination over subsets).
/// The feasible set must be bounded; callers establish that separately.
std::vector<Vec> enumerate_vertices(const Mat& A, const std::vector<Rational>& b, const Mat& Aeq,
                                    const std::vector<Rational>& beq, int dim);

}  // namespace polynorm::linalg
