#pragma once

#include <map>
#include <string>
#include <vector>

#include "kov/poly.hpp"
#include "kov/rational.hpp"

namespace kov {

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(int n);
  static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i * cols_ + j)];
  }

  bool is_zero() const;
  QMatrix transpose() const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& a);
  friend std::vector<Rational> operator*(const QMatrix& a, const std::vector<Rational>& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Exact determinant (square only).
  Rational determinant() const;
  /// Throws SingularSample when the matrix is not invertible.
  QMatrix inverse() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Block-diagonal assembly.
QMatrix block_diag(const std::vector<QMatrix>& blocks);

/// Matrix with PolyQ entries.
class MatPoly {
 public:
  MatPoly() = default;
  MatPoly(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  explicit MatPoly(const QMatrix& m);

  static MatPoly identity(int n);
  static MatPoly scalar(int n, const PolyQ& c);
  /// n x n matrix whose (i,j) entry is the parameter "<prefix>_<i+1><j+1>".
  static MatPoly symbolic(int n, const std::string& prefix);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  PolyQ& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const PolyQ& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<PolyQ>& entries() const { return a_; }

  bool is_zero() const;
  bool is_constant() const;
  /// Entries as rationals; requires is_constant().
  QMatrix to_qmatrix() const;
  MatPoly transpose() const;

  MatPoly& operator+=(const MatPoly& o);
  MatPoly& operator-=(const MatPoly& o);
  friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const PolyQ& c, const MatPoly& a);
  friend MatPoly operator*(const Rational& c, const MatPoly& a);
  MatPoly operator-() const;
  friend bool operator==(const MatPoly& a, const MatPoly& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  MatPoly substitute(const std::map<int, PolyQ>& values) const;
  MatPoly substitute(Param p, const PolyQ& value) const;
  MatPoly epsilon_limit() const;
  MatPoly eps_coefficient(int d) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<PolyQ> a_;
};

MatPoly commutator(const MatPoly& a, const MatPoly& b);

}  // namespace kov
