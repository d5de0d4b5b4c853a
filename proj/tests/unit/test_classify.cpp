#include <random>

#include "../common/reference.hpp"
#include "confdesign/classify/classify.hpp"
#include "doctest.h"

using namespace confdesign;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }

std::vector<Rat> roots_at_h(const MPoly& cond, const Rat& h) {
  return rational_roots(UPoly::from_mpoly(cond.subs(Var::h, h), Var::c));
}

std::vector<RootInterval> real_roots_at_h(const MPoly& cond, const Rat& h, UPoly& poly) {
  poly = UPoly::from_mpoly(cond.subs(Var::h, h), Var::c);
  return real_roots(poly, frac(1, 1000));
}

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
  std::vector<Rat> out;
  for (const char* x : xs) out.push_back(parse_rat(x));
  return out;
}

}  // namespace

TEST_CASE("strength-6 module condition") {
  const auto m = cond6_module();
  CHECK(m.condition == mod6_condition());
  // The degree-6 kernel basis is fixed only up to an invertible change of
  // basis over Q(c,e), which rescales the determinant by a unit free of h.
  const RatFunc ratio = m.determinant / P(reference::delta6());
  CHECK_FALSE(ratio.has_var(Var::h));
  CHECK_FALSE(ratio.has_var(Var::c));
  CHECK(ratio == P("-48/(875*e)"));

  CHECK(roots_at_h(m.condition, frac(1, 2)) == rats({"1/2", "8"}));
  CHECK(roots_at_h(m.condition, Rat(1)) == rats({"8", "16"}));
  CHECK(roots_at_h(m.condition, frac(3, 2)) == rats({"16", "47/2"}));
}

TEST_CASE("strength-6 module condition at e = 1/2") {
  const auto m = cond6_module_half();
  CHECK(m.condition == mod6_condition());
  CHECK_FALSE((m.determinant / P(reference::delta6_half())).has_var(Var::h));
  // With the printed degree-6 vector the determinant is the printed one.
  const auto module = TensorModule::half_case(P("c"));
  auto vecs = design_vectors(6, true);
  vecs[2] = module.reduce(reference::v6_half());
  CHECK(det(build_system(Flavor::module, 6, true, vecs).matrix()) == P(reference::delta6_half()));
  CHECK(det(build_system(Flavor::V2, 6, true, vecs).matrix()) ==
        P("15*(c+24)*(c+15)*(c+44/5)*(c-34/35)*(c^2-55*c+748)/256"));
  CHECK(det(build_system(Flavor::module, 6, true, vecs).matrix()).subs(Var::c, Rat(8)).subs(Var::h, frac(1, 2)).is_zero());
}

TEST_CASE("eigenspace split of a c = 8, h = 1/2 module") {
  const auto sys = build_system(Flavor::module, 6, true, design_vectors(6, true));
  RMatrix m = sys.matrix().map([](const RatFunc& x) { return x.subs(Var::c, Rat(8)).subs(Var::h, frac(1, 2)); });
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  const RatFunc total = ker[0][0] + ker[0][1] + ker[0][2];
  CHECK(ker[0][0] / total == P("255/496"));
  CHECK(ker[0][1] / total == P("1/496"));
  CHECK(ker[0][2] / total == P("15/31"));
}

TEST_CASE("strength-8 module conditions") {
  const auto m = cond8_module();
  CHECK(m.condition == mod8_condition());
  CHECK(UPoly::from_mpoly(m.condition.subs(Var::h, Rat(1)), Var::c).primitive() ==
        (UPoly({Rat(-12), Rat(1)}) * UPoly({Rat(-12), Rat(1)}) * UPoly({Rat(466), Rat(-177), Rat(5)})).primitive());
  CHECK(roots_at_h(m.condition, frac(1, 2)) == rats({"0"}));
  UPoly p;
  const auto r32 = real_roots_at_h(m.condition, frac(3, 2), p);
  REQUIRE(r32.size() == 4);
  CHECK(matches_decimal(p, r32[0], "10.04101"));
  CHECK(matches_decimal(p, r32[1], "19.13162"));
  CHECK(r32[2].contains(Rat(24)));
  CHECK(matches_decimal(p, r32[3], "48.97735"));

  const auto half = half_degree8_vector(mod8_half_condition());
  CHECK(half.module.condition == mod8_half_condition());
  CHECK(TensorModule::half_case(P("c")).lmode_total(1, half.vector).is_zero());
  CHECK(TensorModule::half_case(P("c")).lmode_total(2, half.vector).is_zero());
  auto positive = [](const std::vector<RootInterval>& rs) {
    std::vector<RootInterval> out;
    for (const auto& r : rs)
      if (r.lo >= 0 && !(r.lo == 0 && r.hi == 0)) out.push_back(r);
    return out;
  };
  const auto h1 = positive(real_roots_at_h(half.module.condition, Rat(1), p));
  REQUIRE(h1.size() == 2);
  CHECK(matches_decimal(p, h1[0], "2.268296"));
  CHECK(h1[1].contains(Rat(12)));
  const auto h32 = positive(real_roots_at_h(half.module.condition, frac(3, 2), p));
  REQUIRE(h32.size() == 2);
  CHECK(matches_decimal(p, h32[0], "3.342825"));
  CHECK(matches_decimal(p, h32[1], "18.81561"));
}

TEST_CASE("V2 dimension formulas") {
  const RatFunc d6 = cond6_V2();
  CHECK(d6 == d6_formula());
  CHECK(cond6_V2_half().d == d6_formula());
  CHECK(evaluate_at(d6, Rat(8)) == 156);
  CHECK(evaluate_at(d6, Rat(24)) == 196884);
  CHECK(evaluate_at(d6, Rat(1496)) == 54836);

  const RatFunc d8 = cond8_V2();
  CHECK(d8 == d8_formula());
  CHECK(evaluate_at(d8, Rat(24)) == 196884);
  CHECK(evaluate_at(d8, frac(142, 5)) == -164081);
  CHECK(d6_d8_intersection() == rats({"-516/13", "-44/5", "-22/5", "0", "24", "142/5"}));
  CHECK(c36_exclusion() == -67770);

  const RatFunc d8h = cond8_V2_half();
  CHECK(d8h == d8_half_formula());
  const UPoly eq = UPoly::from_mpoly((d6 - d8h).num(), Var::c);
  const auto rs = real_roots(eq, frac(1, 1000));
  REQUIRE(rs.size() == 6);
  CHECK(matches_decimal(eq, rs[0], "-8.45952"));
  CHECK(rs[1].contains(frac(-22, 5)));
  CHECK(rs[2].contains(Rat(0)));
  CHECK(rs[3].contains(frac(1, 2)));
  CHECK(rs[4].contains(Rat(24)));
  CHECK(rs[5].contains(frac(142, 5)));
}

TEST_CASE("strength-8 V2 system is singular at c = 36") {
  auto sys = build_system(Flavor::V2, 8, false, design_vectors(8, false, RatFunc(Rat(36))), RatFunc(Rat(36)));
  CHECK_THROWS_AS(solve_dimension(sys), std::domain_error);
}

TEST_CASE("e-independence of d(c)") {
  for (int strength : {6, 8}) {
    const auto sys = build_system(Flavor::V2, strength, false, design_vectors(strength, false));
    const RatFunc expected = strength == 6 ? d6_formula() : d8_formula();
    for (const char* e : {"1", "7/3", "-2/9", "5", "11/2"}) {
      DesignSystem s = sys;
      for (auto& r : s.rows) r = r.subs(Var::e, P(e));
      CHECK(solve_dimension(s) == expected);
    }
  }
}

TEST_CASE("c = 36 with other e") {
  CHECK(c36_exclusion(frac(1, 3)) == -67770);
  CHECK(c36_exclusion(Rat(5)) == -67770);
}

TEST_CASE("d6 and d8 agree only on the intersection roots") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-4000, 4000), den(1, 97);
  const auto roots = d6_d8_intersection();
  const RatFunc d6 = d6_formula(), d8 = d8_formula();
  for (const auto& r : roots) {
    CHECK(evaluate_at(d6, r) == evaluate_at(d8, r));
  }
  for (int i = 0; i < 1000; ++i) {
    const Rat c = frac(num(rng), den(rng));
    if (std::find(roots.begin(), roots.end(), c) != roots.end()) continue;
    CHECK(evaluate_at(d6, c) != evaluate_at(d8, c));
  }
}

TEST_CASE("conformal weights from the strength-6 condition") {
  CHECK(solve_h6(frac(47, 2)).rational() == std::make_pair(frac(3, 2), frac(31, 16)));
  CHECK(solve_h6(Rat(16)).rational() == std::make_pair(Rat(1), frac(3, 2)));
  CHECK_FALSE(solve_h6(Rat(24)).rational());
  CHECK(solve_h6(Rat(24)).is_real());
  CHECK_FALSE(solve_h6(Rat(100)).is_real());
}

TEST_CASE("Diophantine scan, rationality filter and table") {
  const auto scan = diophant_scan(2);
  std::vector<Rat> cs;
  for (const auto& r : scan) cs.push_back(r.c);
  CHECK(cs == rats({"1/2", "8", "52/5", "16", "132/7", "20", "102/5", "748/35", "43/2", "22", "808/35", "47/2", "24",
                    "170/7", "49/2", "172/7", "152/5", "61/2", "154/5", "220/7", "63/2", "32", "164/5", "236/7", "34",
                    "242/7", "36", "40", "204/5", "44", "109/2", "428/7", "68", "484/7", "187/2", "132", "1496"}));
  CHECK(scan.back().d == 54836);
  for (const auto& r : scan) CHECK(Rat(r.d) == evaluate_at(d6_formula(), r.c));

  std::vector<Rat> rh;
  for (const auto& r : rational_h_filter(scan)) rh.push_back(r.c);
  CHECK(rh == rats({"1/2", "8", "16", "808/35", "47/2", "164/5", "236/7", "242/7"}));

  const auto table = table1(2);
  struct Cell {
    const char* c;
    long d;
    const char* h1;
    const char* h2;
  };
  const std::vector<Cell> expected{{"8", 156, "1/2", "1"},         {"16", 2296, "1", "3/2"},
                                   {"808/35", 63428, "103/70", "67/35"}, {"47/2", 96256, "3/2", "31/16"},
                                   {"24", 196884, nullptr, nullptr},   {"32", 139504, nullptr, nullptr},
                                   {"164/5", 90118, "11/5", "12/5"},  {"236/7", 63366, "16/7", "17/7"},
                                   {"242/7", 49291, "67/28", "17/7"}, {"40", 20620, nullptr, nullptr},
                                   {"1496", 54836, nullptr, nullptr}};
  REQUIRE(table.size() == expected.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(table[i].c == parse_rat(expected[i].c));
    CHECK(table[i].d == expected[i].d);
    if (expected[i].h1) {
      REQUIRE(table[i].h);
      CHECK(table[i].h->first == parse_rat(expected[i].h1));
      CHECK(table[i].h->second == parse_rat(expected[i].h2));
      for (const Rat& h : {table[i].h->first, table[i].h->second}) {
        std::array<Rat, kNumVars> pt{table[i].c, Rat(0), h, Rat(0)};
        CHECK(mod6_condition().eval(pt) == 0);
      }
    } else {
      CHECK_FALSE(table[i].h);
    }
  }
  CHECK(diophant_scan(1).size() == scan.size());
}

TEST_CASE("fermion feasibility") {
  const auto c40 = fermion_counts(Rat(40));
  CHECK(c40[0] == frac(441768, 37));
  CHECK(fermion_feasibility_scan(2) == rats({"1/2", "8", "16", "20", "47/2", "24", "49/2", "172/7", "152/5", "61/2",
                                             "63/2", "32", "164/5", "236/7", "36"}));
  const auto c1496 = fermion_counts(Rat(1496));
  CHECK_FALSE((is_integer(c1496[0]) && is_integer(c1496[1]) && is_integer(c1496[2])));
}

TEST_CASE("singularity of the module system on and off the admitted list") {
  const auto sys = build_system(Flavor::module, 6, false, design_vectors(6, false));
  const RatFunc d = det(sys.matrix());
  for (const auto& [c, h] : std::vector<std::pair<const char*, const char*>>{
           {"8", "1/2"}, {"8", "1"}, {"16", "1"}, {"16", "3/2"}, {"47/2", "3/2"}, {"164/5", "11/5"}})
    CHECK(d.subs(Var::c, parse_rat(c)).subs(Var::h, parse_rat(h)).subs(Var::e, Rat(3)).is_zero());
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(1, 300), den(1, 13);
  for (int i = 0; i < 50; ++i) {
    const Rat c = frac(num(rng), den(rng)), h = frac(num(rng), den(rng));
    std::array<Rat, kNumVars> pt{c, Rat(0), h, Rat(0)};
    if (mod6_condition().eval(pt) == 0) continue;
    CHECK_FALSE(d.subs(Var::c, c).subs(Var::h, h).subs(Var::e, Rat(3)).is_zero());
  }
}
