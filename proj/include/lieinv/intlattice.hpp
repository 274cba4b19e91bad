#pragma once

#include <stdexcept>
#include <vector>

#include "lieinv/qmatrix.hpp"
#include "lieinv/rational.hpp"

namespace lieinv {

// Dense matrix over Z.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply shape");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Basis of a saturated integer lattice, rows in Hermite normal form:
// staircase pivots, positive pivot entries, entries in pivot columns above a
// pivot reduced into the symmetric range [-p/2, p/2).
struct LatticeBasis {
  std::vector<std::vector<Int>> vectors;

  bool contains(const std::vector<Int>& v) const {
    // back-substitute along the staircase
    std::vector<Int> w = v;
    for (const auto& row : vectors) {
      std::size_t pc = 0;
      while (pc < row.size() && row[pc] == 0) ++pc;
      if (pc == row.size()) continue;
      if (w[pc] % row[pc] != 0) return false;
      Int q = w[pc] / row[pc];
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * row[j];
    }
    for (const auto& x : w)
      if (x != 0) return false;
    return true;
  }
};

// Row Hermite normal form of the lattice spanned by `rows` (zero rows
// dropped).  Pivots positive; entries above each pivot reduced into
// [-p/2, p/2).
inline std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // eliminate column c below row r with Euclidean steps
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];  // truncated division keeps |rem| < |pivot| eventually
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
    ++r;
  }
  rows.resize(r);
  // reduce entries above pivots into [-p/2, p/2)
  for (std::size_t i = r; i-- > 0;) {
    std::size_t pc = 0;
    while (pc < cols && rows[i][pc] == 0) ++pc;
    if (pc == cols) continue;
    const Int p = rows[i][pc];
    for (std::size_t k = 0; k < i; ++k) {
      Int v = rows[k][pc];
      Int rem;
      mpz_fdiv_r(rem.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());  // rem in [0, p)
      if (2 * rem >= p) rem -= p;                                 // into [-p/2, p/2)
      Int q = (v - rem) / p;
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) rows[k][j] -= q * rows[i][j];
    }
  }
  return rows;
}

// HNF basis of {m in Z^cols : Am = 0}.  Row-reduces [A^T | I] with
// unimodular operations; the identity-block rows aligned with zero rows of
// the reduced A^T block form a basis of the kernel.  Unimodularity makes the
// basis generate the full kernel lattice, which is saturated (Av = 0 and
// A(cv) = 0 are equivalent for c != 0).
inline LatticeBasis integer_kernel_basis(const IntMatrix& a) {
  const std::size_t r = a.rows(), s = a.cols();
  std::vector<std::vector<Int>> m(s, std::vector<Int>(r + s, Int(0)));
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < r; ++i) m[j][i] = a(i, j);
    m[j][r + j] = 1;
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < s; ++c) {
    while (true) {
      std::size_t best = s;
      for (std::size_t i = row; i < s; ++i) {
        if (m[i][c] == 0) continue;
        if (best == s || abs(m[i][c]) < abs(m[best][c])) best = i;
      }
      if (best == s) break;
      std::swap(m[row], m[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < s; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[row][c];
        for (std::size_t j = 0; j < r + s; ++j) m[i][j] -= q * m[row][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[row][c] != 0) ++row;
  }
  std::vector<std::vector<Int>> kernel_rows;
  for (std::size_t i = row; i < s; ++i)
    kernel_rows.emplace_back(m[i].begin() + static_cast<std::ptrdiff_t>(r), m[i].end());
  return LatticeBasis{hermite_normal_form(std::move(kernel_rows))};
}

}  // namespace lieinv
