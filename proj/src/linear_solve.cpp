#include "kov/linear_solve.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace kov {

namespace {

std::vector<int> resolve_order(const std::vector<int>& order, int cols) {
  if (order.empty()) {
    std::vector<int> natural(static_cast<std::size_t>(cols));
    std::iota(natural.begin(), natural.end(), 0);
    return natural;
  }
  if (static_cast<int>(order.size()) != cols)
    throw std::invalid_argument("column order must be a permutation of all columns");
  std::vector<bool> seen(static_cast<std::size_t>(cols), false);
  for (int c : order) {
    if (c < 0 || c >= cols || seen[static_cast<std::size_t>(c)])
      throw std::invalid_argument("column order must be a permutation of all columns");
    seen[static_cast<std::size_t>(c)] = true;
  }
  return order;
}

// Gauss-Jordan on [m | t] in place, pivots tried in `order`. Returns pivot
// columns in row order.
std::vector<int> gauss_jordan(QMatrix& m, QMatrix* t, const std::vector<int>& order) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = m.rows();
  for (int c : order) {
    if (row == rows) break;
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      if (t)
        for (int j = 0; j < t->cols(); ++j) std::swap((*t)(piv, j), (*t)(row, j));
    }
    const Rational s = 1 / m(row, c);
    for (int j = 0; j < m.cols(); ++j)
      if (m(row, j) != 0) m(row, j) *= s;
    if (t)
      for (int j = 0; j < t->cols(); ++j)
        if ((*t)(row, j) != 0) (*t)(row, j) *= s;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (int j = 0; j < m.cols(); ++j)
        if (m(row, j) != 0) m(r, j) -= f * m(row, j);
      if (t)
        for (int j = 0; j < t->cols(); ++j)
          if ((*t)(row, j) != 0) (*t)(r, j) -= f * (*t)(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<QVector> kernel_from_rref(const QMatrix& r, const std::vector<int>& pivots,
                                      std::vector<int>& free_cols) {
  const int cols = r.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  free_cols.clear();
  std::vector<QVector> kernel;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    free_cols.push_back(f);
    QVector v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] = -r(static_cast<int>(i), f);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

RrefResult rref_rank_kernel(const QMatrix& a, const std::vector<int>& column_order) {
  RrefResult out;
  out.rref = a;
  out.pivot_cols = gauss_jordan(out.rref, nullptr, resolve_order(column_order, a.cols()));
  out.rank = static_cast<int>(out.pivot_cols.size());
  out.kernel_basis = kernel_from_rref(out.rref, out.pivot_cols, out.free_cols);
  return out;
}

int rank(const QMatrix& a) { return rref_rank_kernel(a).rank; }

int nullity(const QMatrix& a) { return a.cols() - rank(a); }

AffineSolver::AffineSolver(const QMatrix& a, const std::vector<int>& column_order)
    : rows_(a.rows()), cols_(a.cols()) {
  // Greedy row basis: a row joins the basis unless it reduces to zero
  // against the earlier basis rows.
  struct Entry {
    QVector reduced;
    int pivot;
    QVector comb;  // over all rows
  };
  std::vector<Entry> basis;
  for (int j = 0; j < rows_; ++j) {
    QVector row(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) row[static_cast<std::size_t>(c)] = a(j, c);
    QVector comb(static_cast<std::size_t>(rows_));
    comb[static_cast<std::size_t>(j)] = 1;
    for (const auto& e : basis) {
      const Rational& x = row[static_cast<std::size_t>(e.pivot)];
      if (x == 0) continue;
      const Rational f = x / e.reduced[static_cast<std::size_t>(e.pivot)];
      for (int c = 0; c < cols_; ++c)
        if (e.reduced[static_cast<std::size_t>(c)] != 0)
          row[static_cast<std::size_t>(c)] -= f * e.reduced[static_cast<std::size_t>(c)];
      for (int r = 0; r < rows_; ++r)
        if (e.comb[static_cast<std::size_t>(r)] != 0)
          comb[static_cast<std::size_t>(r)] -= f * e.comb[static_cast<std::size_t>(r)];
    }
    int pivot = -1;
    for (int c = 0; c < cols_; ++c)
      if (row[static_cast<std::size_t>(c)] != 0) {
        pivot = c;
        break;
      }
    if (pivot >= 0) {
      basis_rows_.push_back(j);
      basis.push_back({std::move(row), pivot, std::move(comb)});
    } else {
      dependent_rows_.push_back(j);
      QVector dep;
      dep.reserve(basis_rows_.size());
      for (int b : basis_rows_) dep.push_back(comb[static_cast<std::size_t>(b)]);
      dependency_.push_back(std::move(dep));
    }
  }

  const int r = rank();
  QMatrix sub(r, cols_);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < cols_; ++c) sub(i, c) = a(basis_rows_[static_cast<std::size_t>(i)], c);
  transform_ = QMatrix::identity(r);
  pivot_cols_ = gauss_jordan(sub, &transform_, resolve_order(column_order, cols_));
  kernel_ = kernel_from_rref(sub, pivot_cols_, free_cols_);
}

std::pair<QVector, QVector> AffineSolver::solve(const QVector& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_) throw std::invalid_argument("rhs length mismatch");
  QVector obstruction(static_cast<std::size_t>(rows_));
  for (std::size_t t = 0; t < dependent_rows_.size(); ++t) {
    const int j = dependent_rows_[t];
    Rational v = rhs[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < dependency_[t].size(); ++i)
      if (dependency_[t][i] != 0)
        v += dependency_[t][i] * rhs[static_cast<std::size_t>(basis_rows_[i])];
    obstruction[static_cast<std::size_t>(j)] = v;
  }
  QVector x(static_cast<std::size_t>(cols_));
  const int r = rank();
  for (int i = 0; i < r; ++i) {
    Rational v = 0;
    for (int k = 0; k < r; ++k)
      if (transform_(i, k) != 0)
        v += transform_(i, k) * rhs[static_cast<std::size_t>(basis_rows_[static_cast<std::size_t>(k)])];
    x[static_cast<std::size_t>(pivot_cols_[static_cast<std::size_t>(i)])] = v;
  }
  return {std::move(x), std::move(obstruction)};
}

AffineSolveResult AffineSolver::solve(const std::vector<PolyQ>& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_) throw std::invalid_argument("rhs length mismatch");

  // Column of the right-hand side belonging to each monomial.
  std::map<Monomial, std::vector<std::pair<int, Rational>>, MonomialLess> columns;
  for (int row = 0; row < rows_; ++row)
    for (const auto& [m, c] : rhs[static_cast<std::size_t>(row)].terms())
      columns[m].emplace_back(row, c);

  std::vector<int> slot_of_row(static_cast<std::size_t>(rows_), -1);
  for (std::size_t i = 0; i < basis_rows_.size(); ++i)
    slot_of_row[static_cast<std::size_t>(basis_rows_[i])] = static_cast<int>(i);

  AffineSolveResult out;
  out.kernel_basis = kernel_;
  out.free_cols = free_cols_;
  out.complement_rows = dependent_rows_;
  std::vector<std::vector<PolyQ::Term>> part_terms(static_cast<std::size_t>(cols_));
  std::vector<std::vector<PolyQ::Term>> obst_terms(static_cast<std::size_t>(rows_));

  const int r = rank();
  QVector b_basis(static_cast<std::size_t>(r));
  QVector b_full(static_cast<std::size_t>(rows_));
  for (const auto& [mono, entries] : columns) {
    for (auto& v : b_basis) v = 0;
    for (auto& v : b_full) v = 0;
    for (const auto& [row, c] : entries) {
      b_full[static_cast<std::size_t>(row)] = c;
      if (int s = slot_of_row[static_cast<std::size_t>(row)]; s >= 0) b_basis[static_cast<std::size_t>(s)] = c;
    }
    bool ok = true;
    for (std::size_t t = 0; t < dependent_rows_.size(); ++t) {
      const int j = dependent_rows_[t];
      Rational v = b_full[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < dependency_[t].size(); ++i)
        if (dependency_[t][i] != 0 && b_basis[i] != 0) v += dependency_[t][i] * b_basis[i];
      if (v != 0) {
        ok = false;
        obst_terms[static_cast<std::size_t>(j)].emplace_back(mono, std::move(v));
      }
    }
    for (int i = 0; i < r; ++i) {
      Rational v = 0;
      for (int k = 0; k < r; ++k)
        if (transform_(i, k) != 0 && b_basis[static_cast<std::size_t>(k)] != 0)
          v += transform_(i, k) * b_basis[static_cast<std::size_t>(k)];
      if (v != 0)
        part_terms[static_cast<std::size_t>(pivot_cols_[static_cast<std::size_t>(i)])].emplace_back(mono, std::move(v));
    }
    out.per_monomial.push_back({mono, ok});
    if (!ok) out.solvable = false;
  }

  out.particular.reserve(static_cast<std::size_t>(cols_));
  for (auto& t : part_terms) out.particular.push_back(PolyQ::from_sorted_terms(std::move(t)));
  out.obstruction.reserve(static_cast<std::size_t>(rows_));
  for (auto& t : obst_terms) out.obstruction.push_back(PolyQ::from_sorted_terms(std::move(t)));
  return out;
}

AffineSolveResult solve_affine_parametric(const QMatrix& a, const std::vector<PolyQ>& rhs,
                                          const std::vector<int>& column_order) {
  return AffineSolver(a, column_order).solve(rhs);
}

}  // namespace kov
