#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "confdesign/rootsys/rootsys.hpp"

using namespace confdesign;

namespace {

Rat eval_n(const RatFunc& f, int n, int h = 0) {
  RatFunc g = f.subs(Var::n, Rat(n));
  if (g.has_var(Var::h)) g = g.subs(Var::h, Rat(h));
  return g.constant_value();
}

// Brute-force oracle for E8: all vectors of D8 u (D8 + (1/2,...,1/2)) of norm 2.
long e8_norm2_count() {
  long count = 0;
  for (int half = 0; half < 2; ++half) {
    std::vector<int> x(8);
    const int lo = half ? -3 : -2, hi = half ? 3 : 2;  // doubled coordinates
    std::function<void(int, int)> rec = [&](int i, int norm4) {
      if (norm4 > 8) return;
      if (i == 8) {
        int s = 0;
        for (int v : x) s += v;
        if (norm4 == 8 && (s / 2) % 2 == 0) ++count;
        return;
      }
      for (int v = lo; v <= hi; ++v) {
        if ((v % 2 != 0) != (half == 1)) continue;
        x[i] = v;
        rec(i + 1, norm4 + v * v);
      }
    };
    rec(0, 0);
  }
  return count;
}

}  // namespace

TEST_CASE("root system realizations") {
  CHECK(build_roots("E", 8).roots.size() == 240);
  CHECK(e8_norm2_count() == 240);
  CHECK(build_roots("E", 7).roots.size() == 126);
  CHECK(build_roots("E", 6).roots.size() == 72);
  CHECK(build_roots("F", 4).roots.size() == 48);
  const auto g2 = build_roots("G", 2);
  CHECK(g2.roots.size() == 12);
  for (const auto& a : g2.roots) CHECK(a[0] + a[1] + a[2] == 0);
  const auto b4 = build_roots("B", 4);
  long short_roots = 0;
  for (const auto& a : b4.roots) short_roots += dot(a, a) == 1;
  CHECK(short_roots == 8);
  CHECK(b4.roots.size() == 32);
  CHECK_THROWS_AS(build_roots("E", 5), std::domain_error);
  CHECK_THROWS_AS(build_roots("A", 0), std::domain_error);
  CHECK_THROWS_AS(build_roots("X", 3), std::domain_error);

  for (const auto& [t, r] : std::vector<std::pair<std::string, int>>{
           {"A", 3}, {"B", 3}, {"C", 3}, {"D", 5}, {"E", 6}, {"E", 7}, {"E", 8}, {"F", 4}, {"G", 2}}) {
    const auto phi = build_roots(t, r);
    CAPTURE(phi.name());
    std::set<Rat> norms;
    for (const auto& a : phi.roots) {
      norms.insert(dot(a, a));
      RVec neg = a;
      for (auto& v : neg) v = -v;
      CHECK(std::binary_search(phi.roots.begin(), phi.roots.end(), neg));
      // Crystallographic: 2(a,b)/(b,b) is an integer.
      for (const auto& b : phi.roots) CHECK(is_integer(2 * dot(a, b) / dot(b, b)));
    }
    CHECK(norms.size() <= 2);
    if (phi.simply_laced()) CHECK(phi.roots.size() == std::size_t(phi.rank * phi.coxeter));
  }
}

TEST_CASE("root count profiles") {
  for (const auto& [t, r] : std::vector<std::pair<std::string, int>>{
           {"A", 1}, {"A", 2}, {"A", 5}, {"D", 4}, {"D", 7}, {"E", 6}, {"E", 7}, {"E", 8}}) {
    const auto phi = build_roots(t, r);
    CAPTURE(phi.name());
    for (std::size_t i = 0; i < phi.roots.size(); i += 17) CHECK_NOTHROW(rootcount_profile(phi, phi.roots[i]));
  }
  CHECK(rootcount_profile(build_roots("E", 8), default_y(build_roots("E", 8))).n1 == 56);
  CHECK(rootcount_profile(build_roots("A", 2), default_y(build_roots("A", 2))).n1 == 2);
  CHECK(rootcount_profile(build_roots("D", 4), default_y(build_roots("D", 4))).n1 == 8);
  CHECK_THROWS_AS(rootcount_profile(build_roots("B", 3), RVec{1, 1, 0}), std::domain_error);
}

TEST_CASE("Gegenbauer polynomials are harmonic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int n = 2; n <= 16; ++n) {
    RVec y(n);
    for (auto& v : y) v = dist(rng);
    y[0] = 1;
    CAPTURE(n);
    for (int l : {4, 6}) {
      HarmonicPoly r;
      CHECK_NOTHROW(r = gegenbauer_R(l, n, y));
      CHECK(r.laplacian().is_zero());
      RVec x(n);
      for (auto& v : x) v = dist(rng);
      CHECK(r.eval(x) == zonal_eval(l, n, y, x));
    }
  }
  CHECK(gegenbauer_R(4, 1, RVec{Rat(3)}).is_zero());
  CHECK(gegenbauer_R(6, 1, RVec{Rat(2)}).is_zero());
  // Wrong dimension parameter gives a non-harmonic polynomial.
  CHECK_FALSE(gegenbauer_R(4, 3, RVec{1, 0, 0, 0}).laplacian().is_zero());
  CHECK_THROWS_AS(gegenbauer_R(4, 2, RVec{0, 0}), std::domain_error);
}

TEST_CASE("printed closed forms") {
  const RatFunc n = RatFunc::var(Var::n);
  // The class-count derivation reproduces every printed form.
  CHECK(family_sum(4, Family::simply_laced) == closed_form(4, Family::simply_laced));
  CHECK(family_sum(6, Family::simply_laced) == closed_form(6, Family::simply_laced));
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) CHECK(family_sum(4, f) == closed_form(4, f));
  CHECK(family_sum(6, Family::A) == closed_form(6, Family::A));
  CHECK(family_sum(6, Family::D) == closed_form(6, Family::D));
  CHECK(closed_form(4, Family::A) == closed_form(4, Family::simply_laced).subs(Var::h, n + 1));
  CHECK(closed_form(4, Family::D) == closed_form(4, Family::simply_laced).subs(Var::h, 2 * n - 2));
  CHECK_THROWS_AS(closed_form(6, Family::B), std::domain_error);

  for (int k = 2; k <= 12; ++k) {
    CAPTURE(k);
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
      for (int l : {4, 6}) CHECK_NOTHROW(closed_form_sum(l, f, k));
  }
  CHECK(eval_n(closed_form(4, Family::A), 1) == 0);
  CHECK(eval_n(closed_form(4, Family::A), 2) == 0);
  CHECK(eval_n(closed_form(4, Family::B), 4) == 0);
  CHECK(eval_n(closed_form(4, Family::C), 4) == 0);
  CHECK(eval_n(closed_form(4, Family::D), 4) == 0);
}

TEST_CASE("special root sums") {
  auto r = [](int l, const char* t, int n) { return root_sum_R(l, build_roots(t, n)); };
  CHECK(r(6, "A", 2) == 12);
  CHECK(r(6, "D", 4) == 24);
  CHECK(r(4, "E", 6) == 0);
  CHECK(r(6, "E", 6) == 24);
  CHECK(r(4, "E", 7) == 0);
  CHECK(r(6, "E", 7) == Rat(192, 11));
  CHECK(r(4, "E", 8) == 0);
  CHECK(r(6, "E", 8) == 0);
  CHECK(r(4, "F", 4) == 0);
  CHECK(r(6, "F", 4) == 21);
  CHECK(r(4, "G", 2) == 0);
  CHECK(r(6, "G", 2) == -312);
  CHECK(r(4, "B", 4) == 0);
  CHECK(r(4, "C", 4) == 0);
  CHECK(r(6, "C", 4) == -40);  // also by the class counts below
  CHECK(eval_n(family_sum(6, Family::C), 4) == -40);
  CHECK(r(6, "B", 4) == eval_n(family_sum(6, Family::B), 4));
  CHECK(r(6, "B", 4) == 23);

  // Simply-laced closed forms at the E types.
  for (int k : {6, 7, 8}) {
    const auto phi = build_roots("E", k);
    for (int l : {4, 6}) CHECK(eval_n(closed_form(l, Family::simply_laced), k, phi.coxeter) == root_sum_R(l, phi));
  }

  // The explicit polynomial gives the same sums as the zonal evaluation.
  for (const auto& [t, k] : std::vector<std::pair<std::string, int>>{{"E", 7}, {"F", 4}, {"B", 4}, {"A", 3}}) {
    const auto phi = build_roots(t, k);
    for (int l : {4, 6}) CHECK(root_sum(gegenbauer_R(l, phi.rank, default_y(phi)), phi) == root_sum_R(l, phi));
  }
}

TEST_CASE("Weyl and negation symmetry of root sums") {
  std::mt19937 rng(11);
  for (const auto& [t, k] : std::vector<std::pair<std::string, int>>{{"B", 4}, {"C", 3}, {"D", 5}, {"F", 4}, {"E", 8}}) {
    const auto phi = build_roots(t, k);
    const int d = phi.ambient;
    const auto p = gegenbauer_R(4, phi.rank, RVec(d, Rat(1))) + gegenbauer_R(6, phi.rank, default_y(phi));
    const Rat base = root_sum(p, phi);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(d), signs(d, 1);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      int flips = 0;
      for (auto& s : signs)
        if (rng() % 2) s = -1, ++flips;
      if (t == "E" && flips % 2) signs[0] = -signs[0];  // E8 needs an even number of sign changes
      // The symmetry maps the root set to itself.
      std::set<RVec> image;
      for (const auto& a : phi.roots) {
        RVec b(d);
        for (int i = 0; i < d; ++i) b[perm[i]] = signs[i] * a[i];
        image.insert(b);
      }
      CHECK(image == std::set<RVec>(phi.roots.begin(), phi.roots.end()));
      CHECK(root_sum(p.transformed(perm, signs), phi) == base);
    }
    // Odd-degree monomials vanish.
    std::vector<int> e(d, 0);
    e[0] = 3;
    e[d - 1] += 2;
    CHECK(root_sum(HarmonicPoly::monomial(e), phi) == 0);
  }
  const auto g2 = build_roots("G", 2);
  const auto p6 = gegenbauer_R(6, 2, default_y(g2));
  for (std::vector<int> perm : {std::vector<int>{1, 0, 2}, {2, 1, 0}, {1, 2, 0}})
    CHECK(root_sum(p6.transformed(perm, {1, 1, 1}), g2) == root_sum(p6, g2));
}

TEST_CASE("Hurley sums") {
  const auto a1 = build_roots("A", 1);
  const auto s = hurley_sum({a1, a1});
  CHECK(s.first == 8);
  CHECK(s.second == 8);
  CHECK(s.total == 16);
  const auto ab = hurley_sum({a1, build_roots("T", 2)});
  CHECK(ab.total == 8);
  CHECK(hurley_sum({build_roots("T", 2), a1}).total == 8);
  CHECK(hurley_sum({build_roots("A", 2), build_roots("G", 2)}).total ==
        hurley_sum({build_roots("G", 2), build_roots("A", 2)}).total);
  CHECK(sgn(hurley_sum({build_roots("E", 8), build_roots("B", 3), build_roots("T", 1)}).total) > 0);
  CHECK_THROWS_AS(hurley_sum({a1}), std::domain_error);
  CHECK_THROWS_AS(hurley_sum({build_roots("T", 1), build_roots("T", 3)}), std::domain_error);
}
