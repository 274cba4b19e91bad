#pragma once

#include <stdexcept>
#include <vector>

#include "lieinv/rational.hpp"

namespace lieinv {

// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  QMatrix operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rat& b = o(k, j);
          if (!is_zero(b)) r(i, j) += a * b;
        }
      }
    return r;
  }

  QMatrix operator+(const QMatrix& o) const {
    check_shape(o);
    QMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  QMatrix operator-(const QMatrix& o) const {
    check_shape(o);
    QMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  QMatrix operator*(const Rat& c) const {
    QMatrix r = *this;
    for (auto& v : r.data_) v *= c;
    return r;
  }

  QMatrix transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

 private:
  void check_shape(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(sel, j));
    Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

// Basis of the right kernel {v : Mv = 0}, echelonized with free variables
// set to 1 in increasing column order.
inline std::vector<std::vector<Rat>> kernel_basis(QMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[freec] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m(pr, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves Mx = b; returns false when inconsistent.
inline bool solve_linear(QMatrix m, std::vector<Rat> b, std::vector<Rat>& x) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve shape");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rat(0));
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug(pr, m.cols());
  return true;
}

inline bool invert(const QMatrix& m, QMatrix& inv) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return false;
  inv = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return true;
}

inline Rat determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square");
  Rat det(1);
  std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && is_zero(m(sel, col))) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(sel, j));
      det = -det;
    }
    det *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      Rat f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

inline Rat matrix_trace(const QMatrix& m) {
  Rat t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Characteristic polynomial coefficients c_0..c_n of det(tI - M) via the
// Faddeev-LeVerrier recurrence, c_n = 1.
inline std::vector<Rat> char_poly(const QMatrix& m) {
  std::size_t n = m.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  QMatrix mk = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat ck = -matrix_trace(mk) / Rat(static_cast<long>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return c;
}

// Row space echelon basis (unique reduced form) for subspace comparisons.
inline std::vector<std::vector<Rat>> row_echelon_basis(QMatrix m) {
  auto pivots = rref(m);
  std::vector<std::vector<Rat>> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Rat> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline QMatrix from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace lieinv
