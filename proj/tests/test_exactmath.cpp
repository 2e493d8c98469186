#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kac/exactmath.hpp"

using namespace kac;

namespace {
IntPoly P(std::vector<long> asc) {
  std::vector<Int> c(asc.begin(), asc.end());
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("intpoly basics and canonical form") {
  IntPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeff(0) == 0);
  CHECK(z == IntPoly::constant(0));
  CHECK(P({1, 2, 0}) == P({1, 2}));
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(IntPoly::variable() == P({0, 1}));
  CHECK(IntPoly::monomial(3, 2) == P({0, 0, 3}));
  CHECK(P({11, 5, 1}).degree() == 2);
  CHECK(P({11, 5, 1}).coeff(1) == 5);
  CHECK(P({11, 5, 1}).coeff(7) == 0);
  CHECK(P({11, 5, 1}).leading() == 1);
  CHECK_THROWS_AS(IntPoly::monomial(1, -1), InvalidInput);
}

TEST_CASE("intpoly ring laws on samples") {
  IntPoly a = P({1, -3, 2}), b = P({0, 5}), c = P({-7, 0, 0, 1});
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a - a == IntPoly());
  CHECK(a + (-a) == IntPoly());
  CHECK(a * IntPoly::constant(1) == a);
  CHECK(a * IntPoly() == IntPoly());
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("evaluation is a ring homomorphism") {
  IntPoly f = P({5, -2, 0, 1}), g = P({3, 7, 11});
  for (long x : {-4L, -1L, 0L, 1L, 3L, 10L}) {
    Int xv(x);
    CHECK((f + g).eval(xv) == f.eval(xv) + g.eval(xv));
    CHECK((f * g).eval(xv) == f.eval(xv) * g.eval(xv));
  }
  CHECK(f.eval(Int(2)) == 5 - 4 + 8);
  CHECK(f.eval(Rat(1, 2)) == Rat(5) - Rat(1) + Rat(1, 8));
  CHECK(poly_eval(g, Int(10)) == 1173);
}

TEST_CASE("pow") {
  IntPoly q1 = P({1, 1});
  CHECK(q1.pow(0) == IntPoly::constant(1));
  CHECK(q1.pow(3) == P({1, 3, 3, 1}));
  CHECK(IntPoly().pow(0) == IntPoly::constant(1));
  CHECK(IntPoly().pow(2) == IntPoly());
  CHECK_THROWS_AS(q1.pow(-1), InvalidInput);
}

TEST_CASE("intpoly rendering") {
  CHECK(P({11, 5, 1}).str() == "q^2+5q+11");
  CHECK(IntPoly::variable().str() == "q");
  CHECK(IntPoly::constant(1).str() == "1");
  CHECK(IntPoly().str() == "0");
  CHECK(P({2, 0, 0, -1}).str() == "-q^3+2");
  CHECK(P({0, -1, 4}).str() == "4q^2-q");
  CHECK(P({-17}).str() == "-17");
  CHECK(P({0, 0, 6}).str() == "6q^2");
}

TEST_CASE("interpolation recovers exact polynomials") {
  std::vector<std::pair<Int, Int>> pts = {{0, 11}, {1, 17}, {2, 25}};
  CHECK(poly_interpolate(pts) == P({11, 5, 1}));

  IntPoly f = P({5, -2, 0, 1});
  std::vector<std::pair<Int, Int>> sampled;
  for (long x = 0; x <= 3; ++x) sampled.push_back({Int(x), f.eval(Int(x))});
  CHECK(poly_interpolate(sampled) == f);

  CHECK(poly_interpolate({{7, 42}}) == IntPoly::constant(42));

  CHECK_THROWS_AS(poly_interpolate({{0, 0}, {2, 1}}), NonIntegerCoefficients);
  CHECK_THROWS_AS(poly_interpolate({{1, 0}, {1, 5}}), InvalidInput);
  CHECK_THROWS_AS(poly_interpolate({}), InvalidInput);
}

TEST_CASE("exact division") {
  IntPoly a = P({1, 2, 1}), b = P({1, 1});
  CHECK(poly_divexact(a, b) == b);
  CHECK(poly_divexact(IntPoly(), b) == IntPoly());
  IntPoly f = P({3, 0, -5, 1, 2}), g = P({-1, 4, 6});
  CHECK(poly_divexact(f * g, g) == f);
  CHECK_THROWS_AS(poly_divexact(P({1, 1, 1}), b), InvalidInput);
  CHECK_THROWS_AS(poly_divexact(P({0, 1}), P({0, 2})), InvalidInput);
  CHECK_THROWS_AS(poly_divexact(b, IntPoly()), InvalidInput);
  CHECK_THROWS_AS(poly_divexact(IntPoly::constant(1), b), InvalidInput);
}

TEST_CASE("polynomial gcd over the integers") {
  CHECK(poly_gcd(IntPoly(), IntPoly()) == IntPoly());
  CHECK(poly_gcd(P({2, 2}), P({4})) == IntPoly::constant(2));
  IntPoly p = P({-1, 0, 1}), r = P({2, 3, 1});
  CHECK(poly_gcd(p, r) == P({1, 1}));
  CHECK(poly_gcd(-p, -r) == P({1, 1}));
  CHECK(poly_gcd(P({0, 1}), P({0, 0, -1})) == P({0, 1}));
  IntPoly g = P({-3, 1});
  IntPoly m = g * P({1, 0, 2}), n = g * P({5, 1});
  CHECK(poly_gcd(m, n) == g);
  CHECK(poly_gcd(m, IntPoly()) == m);
}

TEST_CASE("rational function canonical form") {
  RatFunc half = RatFunc::of(P({-1, 0, 1}), P({-1, 1}));
  CHECK(half == RatFunc(P({1, 1})));
  CHECK(half.is_polynomial());
  CHECK(half.as_polynomial() == P({1, 1}));

  RatFunc r = RatFunc::of(P({2, 2}), P({2}));
  CHECK(r.num() == P({1, 1}));
  CHECK(r.den() == IntPoly::constant(1));

  RatFunc s = RatFunc::of(P({0, 1}), P({0, 0, -1}));
  CHECK(s.num() == P({-1}));
  CHECK(s.den() == P({0, 1}));
  CHECK(s.den().leading() > 0);
  CHECK(!s.is_polynomial());
  CHECK_THROWS_AS(s.as_polynomial(), NotAPolynomial);

  CHECK(RatFunc().is_zero());
  CHECK(RatFunc().is_polynomial());
  CHECK_THROWS_AS(RatFunc::of(P({1}), IntPoly()), DivisionByZero);
}

TEST_CASE("rational function arithmetic") {
  RatFunc a = RatFunc::of(P({1}), P({-1, 1}));   // 1/(q-1)
  RatFunc b = RatFunc::of(P({1}), P({1, 1}));    // 1/(q+1)
  RatFunc sum = a + b;
  CHECK(sum == RatFunc::of(P({0, 2}), P({-1, 0, 1})));
  CHECK(a - a == RatFunc());
  CHECK(a * b == RatFunc::of(P({1}), P({-1, 0, 1})));
  CHECK(a / b == RatFunc::of(P({1, 1}), P({-1, 1})));
  CHECK((a / a) == RatFunc(IntPoly::constant(1)));
  CHECK_THROWS_AS(a / RatFunc(), DivisionByZero);
  CHECK(ratfunc_normalize(P({2, 2}), P({4})) == RatFunc::of(P({1, 1}), P({2})));
  CHECK(a.str() == "(1)/(q-1)");
  CHECK(RatFunc(P({1, 1})).str() == "q+1");
}

TEST_CASE("bivariate polynomials") {
  BiPoly t = BiPoly::monomial(1, 4, 0) + BiPoly::monomial(2, 3, 0) +
             BiPoly::monomial(3, 2, 0) + BiPoly::monomial(1, 1, 0) +
             BiPoly::monomial(1, 0, 2) + BiPoly::monomial(4, 0, 1);
  CHECK(t.str() == "x^4+2x^3+3x^2+x+y^2+4y");
  CHECK(t.coeff(2, 0) == 3);
  CHECK(t.coeff(1, 1) == 0);
  CHECK(t.eval(1, 1) == 12);
  CHECK(t.at_x(1) == P({7, 4, 1}));

  BiPoly xy = BiPoly::x() * BiPoly::y();
  CHECK((xy + xy + xy + xy).str() == "4xy");
  CHECK((BiPoly::x() + BiPoly::y() * BiPoly::constant(-1)).eval(3, 3) == 0);
  CHECK(BiPoly().str() == "0");
  CHECK(BiPoly::constant(5).str() == "5");
  CHECK((BiPoly::x() + BiPoly::constant(-1)).at_x(1).is_zero());
  BiPoly cancel = BiPoly::x() + BiPoly::monomial(-1, 1, 0);
  CHECK(cancel.is_zero());
  CHECK(cancel == BiPoly());
}
