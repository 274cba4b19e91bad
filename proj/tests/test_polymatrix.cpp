#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lieinv/multipoly.hpp"
#include "lieinv/polymatrix.hpp"

using namespace lieinv;

namespace {
MultiPoly P(const std::string& s, const VarCtxPtr& c) { return parse_poly(s, c); }

PolyMatrix skew_from_upper(const VarCtxPtr& c, std::size_t n,
                           const std::vector<std::string>& upper) {
  PolyMatrix m(n, n, c);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = P(upper[k], c);
      m(j, i) = -m(i, j);
      ++k;
    }
  return m;
}
}  // namespace

TEST_CASE("pfaffian 2x2 and example 9 structure matrix") {
  auto c2 = make_context({"a"});
  auto m2 = skew_from_upper(c2, 2, {"a"});
  CHECK(pfaffian(m2) == P("a", c2));

  // example 9: [x1,x3]=x3, [x1,x4]=x4, [x2,x3]=x4
  auto c = make_context({"x1", "x2", "x3", "x4"});
  auto b = skew_from_upper(c, 4, {"0", "x3", "x4", "x4", "0", "0"});
  CHECK(pfaffian(b) == P("x4^2", c));
  CHECK(determinant(b) == P("x4^4", c));
}

TEST_CASE("pfaffian preconditions") {
  auto c = make_context({"a"});
  PolyMatrix odd(3, 3, c);
  CHECK_THROWS(pfaffian(odd));
  PolyMatrix notskew(2, 2, c);
  notskew(0, 1) = P("a", c);
  CHECK_THROWS(pfaffian(notskew));
}

TEST_CASE("pfaffian squared equals determinant on random skew matrices") {
  auto c = make_context({"a"});
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 * (1 + rng() % 4);  // 2,4,6,8
    PolyMatrix m(n, n, c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 4);
        m(i, j) = MultiPoly::constant(c, make_rat(num, den));
        m(j, i) = -m(i, j);
      }
    MultiPoly pf = pfaffian(m);
    CHECK(pf * pf == determinant(m));
  }
}

TEST_CASE("determinant of diagonal and random matrix vs cofactor oracle") {
  auto c = make_context({"x", "y"});
  PolyMatrix d(3, 3, c);
  d(0, 0) = P("x", c);
  d(1, 1) = P("y", c);
  d(2, 2) = P("2", c);
  CHECK(determinant(d) == P("2*x*y", c));

  // 5x5 rational matrix vs direct cofactor expansion
  std::mt19937_64 rng(8086);
  PolyMatrix m(5, 5, c);
  QMatrix q(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      long v = static_cast<long>(rng() % 11) - 5;
      m(i, j) = MultiPoly::constant(c, Rat(v));
      q(i, j) = Rat(v);
    }
  CHECK(determinant(m).constant_value() == determinant(q));
}

TEST_CASE("rank over fractions") {
  auto c = make_context({"h", "x", "y"});
  // sl(2) structure matrix
  PolyMatrix b(3, 3, c);
  b(0, 1) = P("2*x", c);
  b(0, 2) = P("-2*y", c);
  b(1, 2) = P("h", c);
  b(1, 0) = -b(0, 1);
  b(2, 0) = -b(0, 2);
  b(2, 1) = -b(1, 2);
  CHECK(rank_over_fractions(b) == 2);

  PolyMatrix z(3, 4, c);
  CHECK(rank_over_fractions(z) == 0);
}

TEST_CASE("jacobian rank") {
  auto c = make_context({"h", "x", "y"});
  CHECK(jacobian_rank({P("h^2 + 4*x*y", c)}) == 1);
  CHECK(jacobian_rank({P("5", c)}) == 0);

  auto c4 = make_context({"x1", "x2", "x3", "x4"});
  MultiPoly f1 = P("x2^2*x4", c4), f2 = P("x3^2*x4", c4), f3 = P("x2*x3*x4", c4);
  CHECK(jacobian_rank({f1, f2, f3}) == 2);  // f1 f2 = f3^2
}
