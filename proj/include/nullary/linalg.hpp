#pragma once

#include <optional>
#include <vector>

#include "nullary/rational.hpp"

namespace nullary::linalg {

using Matrix = std::vector<RationalVector>;
using IntMatrix = std::vector<IntegerVector>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Canonical kernel basis of `m` (one vector per free column of its RREF).
/// `cols` is needed when `m` has no rows.
Matrix nullspace(Matrix m, std::size_t cols);

/// Unique solution of `a x = b`, or nullopt when singular or inconsistent.
std::optional<RationalVector> solve_unique(const Matrix& a, const RationalVector& b);

/// Some solution of `a x = b` (free variables set to zero), or nullopt.
std::optional<RationalVector> solve_any(const Matrix& a, const RationalVector& b);

Integer determinant(IntMatrix m);

/// gcd of all maximal (rows x rows) minors of a full-row-rank integer matrix.
/// Zero when the rows are dependent.
Integer maximal_minor_gcd(const IntMatrix& rows);

/// Column-style Hermite reduction: `w * u = [h | 0]` with `u` unimodular and
/// `h` square lower triangular. Requires full row rank.
struct ColumnHermite {
    IntMatrix h;
    IntMatrix u;
};
ColumnHermite column_hermite(const IntMatrix& w);

/// Integer solution of `w x = b` when `w` has full row rank, or nullopt.
std::optional<IntegerVector> solve_integer(const IntMatrix& w, const IntegerVector& b);

/// For rows spanning a non-saturated lattice, a primitive lattice point
/// sum(c_i * row_i) with every c_i in [0, 1) and not all zero.
/// Returns nullopt when the rows already span their saturation.
struct LatticePoint {
    IntegerVector point;
    RationalVector coefficients;
};
std::optional<LatticePoint> parallelepiped_point(const IntMatrix& rows);

}  // namespace nullary::linalg
