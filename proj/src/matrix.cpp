#include "kov/matrix.hpp"

#include <stdexcept>

#include "kov/errors.hpp"

namespace kov {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

// ----------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == cols_, "ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch in +");
  QMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch in -");
  QMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  require(a.cols_ == b.rows_, "shape mismatch in *");
  QMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

QMatrix operator*(const Rational& c, const QMatrix& a) {
  QMatrix r = a;
  for (auto& x : r.a_) x *= c;
  return r;
}

std::vector<Rational> operator*(const QMatrix& a, const std::vector<Rational>& v) {
  require(static_cast<int>(v.size()) == a.cols_, "shape mismatch in matrix-vector *");
  std::vector<Rational> r(static_cast<std::size_t>(a.rows_));
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      if (a(i, j) != 0) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

Rational QMatrix::determinant() const {
  require(rows_ == cols_, "determinant of non-square matrix");
  QMatrix m = *this;
  Rational det = 1;
  const int n = rows_;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

QMatrix QMatrix::inverse() const {
  require(rows_ == cols_, "inverse of non-square matrix");
  const int n = rows_;
  QMatrix m = *this, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularSample("matrix is not invertible");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    Rational s = 1 / m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<std::string>> QMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back(to_string((*this)(i, j)));
  return out;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix block_diag(const std::vector<QMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  QMatrix m(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

// ----------------------------------------------------------------- MatPoly

MatPoly::MatPoly(const QMatrix& m) : MatPoly(m.rows(), m.cols()) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = PolyQ(m(i, j));
}

MatPoly MatPoly::identity(int n) { return scalar(n, PolyQ(1L)); }

MatPoly MatPoly::scalar(int n, const PolyQ& c) {
  MatPoly m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

MatPoly MatPoly::symbolic(int n, const std::string& prefix) {
  MatPoly m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = PolyQ::variable(prefix + "_" + std::to_string(i + 1) + std::to_string(j + 1));
  return m;
}

bool MatPoly::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool MatPoly::is_constant() const {
  for (const auto& x : a_)
    if (!x.is_constant()) return false;
  return true;
}

QMatrix MatPoly::to_qmatrix() const {
  require(is_constant(), "matrix has symbolic entries");
  QMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).constant_term();
  return m;
}

MatPoly MatPoly::transpose() const {
  MatPoly t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  require(a.cols_ == b.rows_, "shape mismatch in *");
  MatPoly r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const PolyQ& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

MatPoly operator*(const PolyQ& c, const MatPoly& a) {
  MatPoly r = a;
  for (auto& x : r.a_) x = c * x;
  return r;
}

MatPoly operator*(const Rational& c, const MatPoly& a) {
  MatPoly r = a;
  for (auto& x : r.a_) x *= c;
  return r;
}

MatPoly MatPoly::operator-() const {
  MatPoly r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

MatPoly MatPoly::substitute(const std::map<int, PolyQ>& values) const {
  MatPoly r = *this;
  for (auto& x : r.a_) x = x.substitute(values);
  return r;
}

MatPoly MatPoly::substitute(Param p, const PolyQ& value) const {
  return substitute(std::map<int, PolyQ>{{p.id, value}});
}

MatPoly MatPoly::epsilon_limit() const {
  MatPoly r = *this;
  for (auto& x : r.a_) x = x.epsilon_limit();
  return r;
}

MatPoly MatPoly::eps_coefficient(int d) const {
  MatPoly r = *this;
  for (auto& x : r.a_) x = x.eps_coefficient(d);
  return r;
}

std::vector<std::vector<std::string>> MatPoly::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j).to_string());
  return out;
}

MatPoly commutator(const MatPoly& a, const MatPoly& b) { return a * b - b * a; }

}  // namespace kov
