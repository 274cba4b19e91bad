#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lieinv/multipoly.hpp"
#include "lieinv/qmatrix.hpp"

namespace lieinv {

// Dense rectangular matrix of polynomials sharing one context.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, VarCtxPtr ctx)
      : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, MultiPoly::zero(ctx)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarCtxPtr& context() const { return ctx_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& rs,
                       const std::vector<std::size_t>& cs) const {
    PolyMatrix m(rs.size(), cs.size(), ctx_);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  QMatrix evaluate(const std::vector<Rat>& point) const {
    QMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  VarCtxPtr ctx_;
  std::vector<MultiPoly> data_;
};

namespace detail {

// Pfaffian over an index subset encoded as a bitmask, expansion along the
// lowest set index, memoized on the mask.
inline MultiPoly pfaffian_mask(const PolyMatrix& m, std::uint64_t mask,
                               std::unordered_map<std::uint64_t, MultiPoly>& memo) {
  if (mask == 0) return MultiPoly::constant(m.context(), Rat(1));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (mask & (std::uint64_t(1) << i)) idx.push_back(i);
  MultiPoly result = MultiPoly::zero(m.context());
  const std::size_t i0 = idx[0];
  int sign = 1;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const MultiPoly& entry = m(i0, idx[j]);
    if (!entry.is_zero_poly()) {
      std::uint64_t rest =
          mask & ~(std::uint64_t(1) << i0) & ~(std::uint64_t(1) << idx[j]);
      MultiPoly sub = pfaffian_mask(m, rest, memo);
      result += (sign > 0 ? entry : -entry) * sub;
    }
    sign = -sign;
  }
  memo.emplace(mask, result);
  return result;
}

}  // namespace detail

// Exact Pfaffian of a skew-symmetric matrix of even dimension;
// pfaffian(M)^2 = det(M).
inline MultiPoly pfaffian(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
  if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian of odd dimension");
  if (m.rows() > 62) throw std::invalid_argument("pfaffian dimension limit");
  if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian of non-skew matrix");
  std::uint64_t mask = (m.rows() == 0) ? 0 : ((std::uint64_t(1) << m.rows()) - 1);
  std::unordered_map<std::uint64_t, MultiPoly> memo;
  return detail::pfaffian_mask(m, mask, memo);
}

// Pfaffian of the principal minor on `idx` (assumes the full matrix is skew).
inline MultiPoly principal_pfaffian(const PolyMatrix& m, const std::vector<std::size_t>& idx) {
  std::uint64_t mask = 0;
  for (auto i : idx) mask |= std::uint64_t(1) << i;
  std::unordered_map<std::uint64_t, MultiPoly> memo;
  return detail::pfaffian_mask(m, mask, memo);
}

namespace detail {

// Laplace expansion along rows with memoization on the column mask; suits
// the small sparse matrices produced by structure constants.
inline MultiPoly det_mask(const PolyMatrix& m, std::size_t row, std::uint64_t colmask,
                          std::unordered_map<std::uint64_t, MultiPoly>& memo) {
  if (row == m.rows()) return MultiPoly::constant(m.context(), Rat(1));
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  MultiPoly result = MultiPoly::zero(m.context());
  int sign = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!(colmask & (std::uint64_t(1) << j))) continue;
    const MultiPoly& entry = m(row, j);
    if (!entry.is_zero_poly()) {
      MultiPoly sub = det_mask(m, row + 1, colmask & ~(std::uint64_t(1) << j), memo);
      result += (sign > 0 ? entry : -entry) * sub;
    }
    sign = -sign;
  }
  memo.emplace(colmask, result);
  return result;
}

}  // namespace detail

// Exact determinant via memoized Laplace expansion (fraction-free: no
// polynomial division occurs at all).
inline MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() > 62) throw std::invalid_argument("determinant dimension limit");
  if (m.rows() == 0) return MultiPoly::constant(m.context(), Rat(1));
  std::uint64_t mask = (std::uint64_t(1) << m.rows()) - 1;
  std::unordered_map<std::uint64_t, MultiPoly> memo;
  return detail::det_mask(m, 0, mask, memo);
}

// Rank of M over the fraction field R(g).  Deterministic fraction-free
// (Bareiss) elimination; an evaluation fast path would only ever
// under-estimate, so the symbolic sweep is authoritative and always runs.
inline std::size_t rank_over_fractions(const PolyMatrix& m_in) {
  PolyMatrix m = m_in;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<bool> row_used(rows, false);
  MultiPoly prev_pivot = MultiPoly::constant(m.context(), Rat(1));
  std::size_t rank = 0;
  std::vector<std::size_t> rowperm;
  for (std::size_t col = 0; col < cols; ++col) {
    // smallest nonzero entry as pivot
    std::size_t pr = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i] || m(i, col).is_zero_poly()) continue;
      if (pr == rows || m(i, col).term_count() < m(pr, col).term_count()) pr = i;
    }
    if (pr == rows) continue;
    row_used[pr] = true;
    rowperm.push_back(pr);
    ++rank;
    const MultiPoly pivot = m(pr, col);
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i] || m(i, col).is_zero_poly()) continue;
      for (std::size_t j = col + 1; j < cols; ++j) {
        MultiPoly num = m(i, j) * pivot - m(i, col) * m(pr, j);
        m(i, j) = divide_exact(num, prev_pivot);  // Bareiss: division is exact
      }
      m(i, col) = MultiPoly::zero(m.context());
    }
    prev_pivot = pivot;
  }
  return rank;
}

// Rank over R(g) of the Jacobian (d f_i / d x_j); by the characteristic-zero
// Jacobian criterion this equals the transcendence degree of the field the
// f_i generate.
inline std::size_t jacobian_rank(const std::vector<MultiPoly>& fs) {
  if (fs.empty()) return 0;
  const VarCtxPtr& ctx = fs.front().context();
  const std::size_t n = ctx->size();
  PolyMatrix jac(fs.size(), n, ctx);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = fs[i].derivative(j);
  return rank_over_fractions(jac);
}

}  // namespace lieinv
