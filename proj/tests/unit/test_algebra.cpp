#include <random>

#include "confdesign/algebra/matrix.hpp"
#include "confdesign/algebra/ratfunc.hpp"
#include "confdesign/algebra/upoly.hpp"
#include "doctest.h"

using namespace confdesign;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }
MPoly poly(const char* s) {
  RatFunc r = parse_ratfunc(s);
  REQUIRE(r.is_polynomial());
  return r.num();
}

std::vector<UFactor> factors_of(const char* s) { return factor(UPoly::from_mpoly(poly(s), Var::c)).second; }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("6/-4")) == "-3/2");
  CHECK(to_string(parse_rat(" 10 ")) == "10");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(binomial(-3, 2) == 6);
  Rat r;
  CHECK(rational_sqrt(frac(49, 4), r));
  CHECK(r == frac(7, 2));
  CHECK_FALSE(rational_sqrt(Rat(2), r));
}

TEST_CASE("polynomial arithmetic") {
  MPoly a = poly("(c+e)^2"), b = poly("c^2 + 2*c*e + e^2");
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK(poly("c*e - e*c").is_zero());
  CHECK(a.degree(Var::e) == 2);
  CHECK(exact_div(poly("c^2-e^2"), poly("c-e")) == poly("c+e"));
  CHECK_THROWS_AS(exact_div(poly("c^2+1"), poly("c-e")), std::domain_error);
  CHECK(a.subs(Var::e, Rat(1)) == poly("c^2+2*c+1"));
  CHECK(poly("c*h").derivative(Var::h) == poly("c"));
}

TEST_CASE("polynomial gcd") {
  CHECK(gcd(poly("(c-e)*(c+2*h)"), poly("(c-e)*(h+1)")) == poly("c-e"));
  CHECK(gcd(poly("6*c^2"), poly("4*c*e")) == poly("c"));
  CHECK(gcd(poly("(5*e+22)*(c+h)^2*e"), poly("(5*e+22)^2*(c+h)")) == poly("(5*e+22)*(c+h)"));
  CHECK(gcd(poly("c^3-1"), poly("c^2-1")) == poly("c-1"));
  CHECK(gcd(poly("c+e+h"), poly("c-e")).is_constant());
  MPoly f = poly("(c*e + h^2 - 3)*(c - 2*e*h + 1)");
  MPoly g = poly("(c*e + h^2 - 3)*(e^2 + c*h)");
  CHECK(gcd(f, g) == poly("c*e + h^2 - 3"));
}

TEST_CASE("rational functions are canonical") {
  RatFunc x = P("1/(c-e) + 1/(c+e)");
  RatFunc y = P("2*c/(c^2-e^2)");
  CHECK(x == y);
  CHECK(P("(c^2-1)/(2*c-2)") == P("(c+1)/2"));
  CHECK(P("(c^2-1)/(2*c-2)").is_polynomial());
  CHECK(P("1/(-2*c)").den() == poly("c"));
  RatFunc u = P("c/(c+e)") * P("(c+e)/c");
  CHECK(u == RatFunc(1));
  CHECK(P("(c+1)/(c-1)").subs(Var::c, Rat(3)) == RatFunc(2));
  CHECK_THROWS_AS(P("1/(c-1)").subs(Var::c, Rat(1)), std::domain_error);
  CHECK_THROWS_AS(parse_ratfunc("c +* e"), std::invalid_argument);
}

TEST_CASE("univariate factorization") {
  auto f = factors_of("c*(5*c+22)");
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor.to_mpoly(Var::c) == poly("c"));
  CHECK(f[1].factor.to_mpoly(Var::c) == poly("5*c+22"));

  auto g = factors_of("10*c^3-474*c^2+5180*c-11184");
  REQUIRE(g.size() == 2);
  CHECK(g[0].factor.to_mpoly(Var::c) == poly("c-12"));
  CHECK(g[1].factor.to_mpoly(Var::c) == poly("5*c^2-177*c+466"));

  auto h = factors_of("(c^2+1)^2*(c-3)^3*(c^4-10*c^2+1)*7");
  REQUIRE(h.size() == 3);
  CHECK(h[0].multiplicity == 3);
  CHECK(h[1].factor.to_mpoly(Var::c) == poly("c^2+1"));
  CHECK(h[1].multiplicity == 2);
  CHECK(h[2].factor.to_mpoly(Var::c) == poly("c^4-10*c^2+1"));

  CHECK(rational_roots(UPoly::from_mpoly(poly("(2*c-1)*(c-8)*(c^2+3)"), Var::c)) ==
        std::vector<Rat>{frac(1, 2), Rat(8)});
  CHECK_THROWS_AS(factor(UPoly{}), std::domain_error);
}

TEST_CASE("factorization of products of many linear factors") {
  UPoly p(Rat(1));
  for (int k : {-7, -3, 0, 2, 5, 11, 13}) p = p * UPoly(std::vector<Rat>{-k, 1});
  p = p * UPoly(std::vector<Rat>{-1, 0, 0, 2});  // 2c^3 - 1
  auto [content, fs] = factor(p);
  CHECK(fs.size() == 8);
  UPoly back(content);
  for (auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) back = back * f.factor;
  CHECK(back == p);
}

TEST_CASE("linear algebra") {
  RMatrix a(2, 2);
  a(0, 0) = P("c");
  a(0, 1) = P("1/e");
  a(1, 0) = P("e");
  a(1, 1) = P("h/(c-e)");
  CHECK(det(a) == det_cofactor(a));
  CHECK(det(a) == P("c*h/(c-e) - 1"));

  auto sol = solve_linear(RMatrix::identity(3), {P("c"), P("e"), P("h")});
  REQUIRE_FALSE(sol.singular);
  CHECK(sol.x[1] == P("e"));

  RMatrix s(2, 2);
  s(0, 0) = P("c");
  s(0, 1) = P("2*c");
  s(1, 0) = P("e");
  s(1, 1) = P("2*e");
  auto sing = solve_linear(s, {P("1"), P("0")});
  CHECK(sing.singular);
  REQUIRE(sing.kernel.size() == 1);
  CHECK(sing.kernel[0][0] == P("-2"));
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        MPoly v = MPoly(static_cast<long>(small(rng))) + MPoly(static_cast<long>(small(rng))) * MPoly::var(Var::c) +
                  MPoly(static_cast<long>(small(rng))) * MPoly::var(Var::e);
        m(i, j) = RatFunc(v, (small(rng) > 1) ? MPoly::var(Var::h) + MPoly(1L) : MPoly(1L));
      }
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(-9, 9);
  RMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = P("c") * RatFunc(static_cast<long>(i + 1)) + P("e^2") * RatFunc(static_cast<long>(j)) -
                P("h") + RatFunc(static_cast<long>(i * j));
  const RatFunc d = det(m);
  MPoly p = poly("c^2*e - h + 3"), q = poly("e*h + c - 1");
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Rat, kNumVars> pt{frac(small(rng), 1 + trial % 5), Rat(small(rng)), frac(small(rng), 3), Rat(0)};
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    QMatrix mq = m.map([&](const RatFunc& x) { return x.eval(pt); });
    CHECK(d.eval(pt) == det(mq));
  }
}

TEST_CASE("real root isolation") {
  // (x - 1/3)(x^2 - 2)(x + 5)
  const UPoly p = (UPoly({frac(-1, 3), Rat(1)}) * UPoly({Rat(-2), Rat(0), Rat(1)})) * UPoly({Rat(5), Rat(1)});
  const auto roots = real_roots(p, frac(1, 1000));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].contains(Rat(-5)));
  CHECK(roots[1].hi - roots[1].lo <= frac(1, 1000));
  CHECK(matches_decimal(p, roots[1], "-1.4142"));
  CHECK(roots[2].contains(frac(1, 3)));
  CHECK(matches_decimal(p, roots[3], "1.41421"));
  CHECK_FALSE(matches_decimal(p, roots[3], "1.41422"));
  CHECK(real_roots(UPoly({Rat(1), Rat(0), Rat(1)}), Rat(1)).empty());
}
