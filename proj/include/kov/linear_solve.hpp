#pragma once

#include <vector>

#include "kov/matrix.hpp"
#include "kov/poly.hpp"

namespace kov {

using QVector = std::vector<Rational>;

struct RrefResult {
  QMatrix rref;
  int rank = 0;
  std::vector<int> pivot_cols;
  /// One vector per free column f: 1 at f, minus the rref column at pivots.
  std::vector<QVector> kernel_basis;
  std::vector<int> free_cols;
};

/// Gauss-Jordan reduction. `column_order` (a permutation of 0..cols-1)
/// sets the order in which columns are tried as pivots; empty means natural
/// order. Columns late in the order end up free whenever possible.
RrefResult rref_rank_kernel(const QMatrix& a, const std::vector<int>& column_order = {});

int rank(const QMatrix& a);
int nullity(const QMatrix& a);

struct MonomialVerdict {
  Monomial monomial;
  bool solvable = true;
};

/// Outcome of solving A x = rhs with polynomial right-hand side.
/// Invariant: A * particular + obstruction == rhs, exactly, and
/// obstruction is supported on `complement_rows`.
struct AffineSolveResult {
  bool solvable = true;
  std::vector<MonomialVerdict> per_monomial;
  std::vector<PolyQ> particular;
  std::vector<QVector> kernel_basis;
  std::vector<int> free_cols;
  std::vector<PolyQ> obstruction;
  std::vector<int> complement_rows;
};

/// Factorization of a constant rational matrix, reusable across many
/// right-hand sides.
///
/// The cokernel complement is spanned by the unit vectors of the rows that
/// are linear combinations of earlier rows (the non-pivot rows of the
/// reduced transpose). The obstruction entry for such a row j is
/// rhs_j minus the same combination of earlier right-hand sides, which is
/// independent of any pivoting choice.
class AffineSolver {
 public:
  explicit AffineSolver(const QMatrix& a, const std::vector<int>& column_order = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(basis_rows_.size()); }
  int nullity() const { return cols_ - rank(); }
  const std::vector<QVector>& kernel_basis() const { return kernel_; }
  const std::vector<int>& free_cols() const { return free_cols_; }
  const std::vector<int>& complement_rows() const { return dependent_rows_; }

  AffineSolveResult solve(const std::vector<PolyQ>& rhs) const;

  /// Rational right-hand side: particular solution (free columns zero) and
  /// obstruction vector.
  std::pair<QVector, QVector> solve(const QVector& rhs) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> basis_rows_;
  std::vector<int> dependent_rows_;
  // for dependent_rows_[t]: coefficients over basis_rows_ with
  // row_j + sum coeff_i * row_{basis_i} == 0
  std::vector<QVector> dependency_;
  // T with T * A[basis_rows_] == rref; pivot_cols_[i] is the pivot of row i
  QMatrix transform_;
  std::vector<int> pivot_cols_;
  std::vector<int> free_cols_;
  std::vector<QVector> kernel_;
};

AffineSolveResult solve_affine_parametric(const QMatrix& a, const std::vector<PolyQ>& rhs,
                                          const std::vector<int>& column_order = {});

}  // namespace kov
