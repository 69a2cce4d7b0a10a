#pragma once

#include "ahss/int_types.hpp"

#include <optional>

namespace ahss {

/// Unimodular factorization u * source * v = d with d diagonal, nonnegative,
/// and each diagonal entry dividing the next. Nonzero entries precede zeros.
struct SmithDecomposition {
  IntMat u;       // rows x rows, |det| = 1
  IntMat d;       // rows x cols, diagonal
  IntMat v;       // cols x cols, |det| = 1
  IntMat source;  // the decomposed matrix

  Index diagonal_length() const { return std::min(d.rows(), d.cols()); }
  Index rank() const;
};

SmithDecomposition smith(const IntMat& a);

/// Exact determinant by fraction-free elimination. Square input required.
Int determinant(const IntMat& a);

/// Some integer x with a*x = b, or nullopt when none exists.
std::optional<IntVec> solve(const IntMat& a, const IntVec& b);

/// Columnwise solve: X with a*X = b, or nullopt when some column has no solution.
std::optional<IntMat> solve_matrix(const IntMat& a, const IntMat& b);

/// Basis of the integer kernel lattice of a, one column per basis vector.
IntMat kernel_basis(const IntMat& a);

/// As above, reusing an existing decomposition of the same matrix.
std::optional<IntVec> solve(const SmithDecomposition& s, const IntVec& b);
IntMat kernel_basis(const SmithDecomposition& s);

}  // namespace ahss
