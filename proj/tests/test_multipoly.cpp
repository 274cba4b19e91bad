#include <catch2/catch_amalgamated.hpp>

#include "lieinv/multipoly.hpp"

using namespace lieinv;

namespace {
VarCtxPtr ctx4() { return make_context({"x1", "x2", "x3", "x4"}); }
MultiPoly P(const std::string& s, const VarCtxPtr& c) { return parse_poly(s, c); }
}  // namespace

TEST_CASE("parse/print round-trip under graded-lex order") {
  auto c = ctx4();
  for (const char* s : {"2*x1*x4 - x2^2", "x1 - 2*x2", "0", "1/2*x3^4 + x1*x2*x3 - 7",
                        "x4^2", "-x1 + 3/4"}) {
    MultiPoly p = P(s, c);
    CHECK(parse_poly(to_string(p), c) == p);
  }
  CHECK(to_string(P("x2^2 - 2*x1*x4", c)) == "-2*x1*x4 + x2^2");
  CHECK(to_string(MultiPoly::zero(c)) == "0");
}

TEST_CASE("arithmetic basics") {
  auto c = ctx4();
  MultiPoly a = P("x1 + x2", c), b = P("x1 - x2", c);
  CHECK(a * b == P("x1^2 - x2^2", c));
  CHECK(a + b == P("2*x1", c));
  CHECK((a - a).is_zero_poly());
  CHECK(a.pow(2) == P("x1^2 + 2*x1*x2 + x2^2", c));
}

TEST_CASE("canonicalize") {
  auto c = ctx4();
  CHECK(canonicalize(P("2/3*x1 - 4/3*x2", c)) == P("x1 - 2*x2", c));
  CHECK(canonicalize(MultiPoly::zero(c)).is_zero_poly());
  CHECK(canonicalize(P("-6*x4^2", c)) == P("x4^2", c));
  // idempotence and scale invariance on a few polynomials
  for (const char* s : {"3*x1*x2 - 9/2*x3", "x4^3 - x4", "5"}) {
    MultiPoly p = P(s, c);
    MultiPoly cp = canonicalize(p);
    CHECK(canonicalize(cp) == cp);
    CHECK(canonicalize(p * make_rat(-7, 3)) == cp);
  }
}

TEST_CASE("partial derivative") {
  auto hxy = make_context({"h", "x", "y"});
  MultiPoly f = parse_poly("h^2 + 4*x*y", hxy);
  CHECK(partial_derivative(f, 0) == parse_poly("2*h", hxy));
  auto c = ctx4();
  CHECK(partial_derivative(P("x4^2", c), 3) == P("2*x4", c));
  auto l5 = make_context({"h", "x", "y", "e0", "e1"});
  MultiPoly g = parse_poly("e0*e1*h + e1^2*x - e0^2*y", l5);
  CHECK(partial_derivative(g, 3) == parse_poly("e1*h - 2*e0*y", l5));
}

TEST_CASE("evaluate") {
  auto c = ctx4();
  MultiPoly p = P("x4^2", c);
  CHECK(p.evaluate({Rat(0), Rat(0), Rat(0), Rat(1)}) == Rat(1));
  MultiPoly q = P("x1^2 + 4*x1*x2 - x3 + 5", c);
  CHECK(q.evaluate({Rat(0), Rat(0), Rat(0), Rat(0)}) == Rat(5));
  auto hxy = make_context({"h", "x", "y"});
  MultiPoly f = parse_poly("h^2 + 4*x*y", hxy);
  CHECK(f.evaluate({Rat(1), Rat(2), Rat(3)}) == Rat(25));
}

TEST_CASE("substitute and shift") {
  auto c = ctx4();
  MultiPoly p = P("x1^2*x2 + x2*x3", c);
  CHECK(p.substitute(0, Rat(2)) == P("4*x2 + x2*x3", c));
  MultiPoly sh = p.shift(0, Rat(1));
  CHECK(sh == P("x1^2*x2 + 2*x1*x2 + x2 + x2*x3", c));
  CHECK(sh.shift(0, Rat(-1)) == p);
}

TEST_CASE("exact division") {
  auto c = ctx4();
  MultiPoly a = P("x1^2 - x2^2", c), d = P("x1 + x2", c);
  CHECK(divide_exact(a, d) == P("x1 - x2", c));
  MultiPoly q;
  CHECK(!try_divide_exact(P("x1^2 + x2", c), d, q));
  CHECK(divides(P("x4", c), P("x4^2", c)));
  CHECK(!divides(P("x3", c), P("x4^2", c)));
}

TEST_CASE("homogeneity and degrees") {
  auto c = ctx4();
  CHECK(P("x1*x4 - x2*x3", c).is_homogeneous());
  CHECK(!P("x1*x4 - x2", c).is_homogeneous());
  CHECK(P("x1^2*x3 + x4", c).total_degree() == 3);
  CHECK(MultiPoly::zero(c).total_degree() == -1);
}
