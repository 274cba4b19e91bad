#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lieinv/intlattice.hpp"
#include "lieinv/qmatrix.hpp"

using namespace lieinv;

TEST_CASE("rref, rank, kernel") {
  QMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    Rat s = v[0] + 2 * v[1] + 3 * v[2];
    CHECK(is_zero(s));
  }
}

TEST_CASE("solve and invert") {
  QMatrix m(2, 2);
  m(0, 0) = 2; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 1;
  std::vector<Rat> x;
  REQUIRE(solve_linear(m, {Rat(3), Rat(2)}, x));
  CHECK(x[0] == Rat(1));
  CHECK(x[1] == Rat(1));
  QMatrix inv;
  REQUIRE(invert(m, inv));
  CHECK(m * inv == QMatrix::identity(2));
  CHECK(determinant(m) == Rat(1));
}

TEST_CASE("char poly of diag(1,2)") {
  QMatrix m(2, 2);
  m(0, 0) = 1; m(1, 1) = 2;
  auto c = char_poly(m);  // t^2 - 3t + 2
  REQUIRE(c.size() == 3);
  CHECK(c[2] == Rat(1));
  CHECK(c[1] == Rat(-3));
  CHECK(c[0] == Rat(2));
}

namespace {
IntMatrix rowmat(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
  return m;
}
}  // namespace

TEST_CASE("integer kernel basis, spec examples") {
  // A = [1 2] -> {(2, -1)}
  auto k1 = integer_kernel_basis(rowmat({{1, 2}}));
  REQUIRE(k1.vectors.size() == 1);
  CHECK(k1.vectors[0] == std::vector<Int>{Int(2), Int(-1)});

  // A = 0 (2x2) -> {(1,0),(0,1)}
  auto k2 = integer_kernel_basis(rowmat({{0, 0}, {0, 0}}));
  REQUIRE(k2.vectors.size() == 2);
  CHECK(k2.vectors[0] == std::vector<Int>{Int(1), Int(0)});
  CHECK(k2.vectors[1] == std::vector<Int>{Int(0), Int(1)});

  // A = [1 1 2] -> {(1,-1,0),(0,2,-1)}
  auto k3 = integer_kernel_basis(rowmat({{1, 1, 2}}));
  REQUIRE(k3.vectors.size() == 2);
  CHECK(k3.vectors[0] == std::vector<Int>{Int(1), Int(-1), Int(0)});
  CHECK(k3.vectors[1] == std::vector<Int>{Int(0), Int(2), Int(-1)});
}

TEST_CASE("kernel saturation on random matrices") {
  // brute-force every kernel vector with small entries and check membership
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + rng() % 2, s = 2 + rng() % 2;
    IntMatrix a(r, s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < s; ++j)
        a(i, j) = static_cast<long>(rng() % 9) - 4;
    auto basis = integer_kernel_basis(a);
    for (const auto& v : basis.vectors) {
      auto img = a.apply(v);
      for (const auto& x : img) CHECK(x == 0);
    }
    std::vector<Int> vec(s, Int(-5));
    while (true) {
      auto img = a.apply(vec);
      bool in_kernel = true;
      for (const auto& x : img) in_kernel = in_kernel && x == 0;
      if (in_kernel) CHECK(basis.contains(vec));
      std::size_t pos = 0;
      while (pos < s && vec[pos] == 5) vec[pos++] = -5;
      if (pos == s) break;
      vec[pos] += 1;
    }
  }
}

TEST_CASE("hermite normal form shape") {
  auto h = hermite_normal_form({{Int(4), Int(6)}, {Int(2), Int(2)}});
  REQUIRE(h.size() == 2);
  // pivots positive, staircase
  CHECK(h[0][0] > 0);
  CHECK(h[1][0] == 0);
  CHECK(h[1][1] > 0);
}
