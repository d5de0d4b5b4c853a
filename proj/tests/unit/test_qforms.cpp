#include <doctest.h>

#include "confdesign/qforms/qseries.hpp"

using namespace confdesign;

namespace {

std::vector<Rat> ints(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Rat> head(const QSeries& s, std::size_t n) { return s.truncated(n).coeffs; }

// Partitions of n into parts >= lo, by brute recursion.
long count_partitions(int n, int lo) {
  if (n == 0) return 1;
  long total = 0;
  for (int p = lo; p <= n; ++p) total += count_partitions(n - p, p);
  return total;
}

}  // namespace

TEST_CASE("j and its cube root") {
  const auto cj = qs_cbrt_j(12);
  CHECK(cj.lead48 == -16);
  CHECK(head(cj, 4) == ints({1, 248, 4124, 34752}));

  const auto j = qs_j(12);
  CHECK(head(j - QSeries::one(12).scaled(Rat(744)), 4) == ints({1, 0, 196884, 21493760}));

  // Oracles: j = 1728 E4^3 / (E4^3 - E6^2), cbrt(j) = E4 / eta^8.
  const auto e4c = qs_e4(13).pow(3);
  const auto disc = (e4c - qs_e6(13).pow(2)).scaled(Rat(1, 1728));
  CHECK(disc.at(0) == 0);
  const QSeries shifted{48, std::vector<Rat>(disc.coeffs.begin() + 1, disc.coeffs.end())};
  CHECK((e4c.truncated(12) / shifted) == j);
  CHECK((qs_e4(12) / qs_eta(12).pow(8)) == cj);

  CHECK(cj.pow(3) == j);
  CHECK(qs_eta(15).pow(24) == qs_delta(15));
  CHECK((qs_delta(15) * (qs_j(15) - QSeries::one(15).scaled(Rat(744)))).integral());
}

TEST_CASE("truncation bookkeeping") {
  for (std::size_t lo : {3u, 6u, 9u}) {
    CHECK(qs_cbrt_j(14).truncated(lo) == qs_cbrt_j(lo));
    CHECK(qs_j(14).truncated(lo) == qs_j(lo));
    CHECK(vacuum_character(Rat(24), 14).truncated(lo) == vacuum_character(Rat(24), lo));
  }
  const QSeries a{0, ints({1, 2, 3, 4, 5})};
  const QSeries b{48, ints({1, 1, 1})};
  CHECK((a + b).order() == 4);
  CHECK((a * b).order() == 3);
  CHECK((a * b).lead48 == 48);
  CHECK_THROWS_AS(QSeries(0, ints({0, 1})).inverse(), std::domain_error);
  CHECK_THROWS_AS(QSeries(0, ints({2, 1})).root(3), std::domain_error);
  CHECK_THROWS_AS(a + QSeries(1, ints({1})), std::invalid_argument);
}

TEST_CASE("vacuum characters") {
  const auto v = vacuum_character(Rat(1, 2), 12);
  CHECK(v.lead48 == -1);
  for (int n = 0; n < 12; ++n) CHECK(v.at(n) == count_partitions(n, 2));
  CHECK(v.at(6) == 4);
  CHECK(vacuum_character(Rat(24), 3).lead48 == -48);
  CHECK_THROWS_AS(vacuum_character(Rat(1, 3), 3), std::domain_error);

  const auto ising = ising_vacuum_character(10);
  CHECK(ising.lead48 == -1);
  CHECK(head(ising, 10) == ints({1, 0, 1, 1, 2, 2, 3, 3, 5, 5}));

  // Square of the vacuum numerator against the decomposition into Verma characters.
  const auto num = vacuum_character(Rat(0), 9);
  const QSeries p{0, ints({1, 1, 2, 3, 5, 7, 11, 15, 22})};
  const QSeries extra{0, ints({0, 0, 1, 0, 1, 0, 2, 0, 3})};
  CHECK(num * num == num + extra * p);
}

TEST_CASE("extremal characters") {
  const auto x24 = extremal_character(24, 8);
  CHECK(x24.dim_V2() == 196884);
  CHECK(x24.series == (qs_j(8) - QSeries::one(8).scaled(Rat(744))));
  CHECK(extremal_character(32).dim_V2() == 139504);
  CHECK(extremal_character(40).dim_V2() == 20620);
  for (int c : {8, 16, 24, 32, 40, 48, 72}) {
    const auto x = extremal_character(c);
    CAPTURE(c);
    CHECK(sgn(x.A1) > 0);
    const auto vac = vacuum_character(Rat(c), x.series.order());
    const auto diff = x.series - vac;
    for (int i = 0; i <= x.k; ++i) CHECK(diff.at(i) == 0);
    CHECK(diff.at(x.k + 1) == x.A1);
  }
  CHECK(extremal_character(8).series == qs_cbrt_j(8));
  CHECK_THROWS_AS(extremal_character(12), std::invalid_argument);
}

TEST_CASE("modular form dimensions and extremal design strength") {
  // Oracle: count monomials E4^a E6^b of weight w.
  for (int w = -4; w <= 60; ++w) {
    int count = 0;
    for (int a = 0; 4 * a <= w; ++a)
      for (int b = 0; 4 * a + 6 * b <= w; ++b)
        if (4 * a + 6 * b == w) ++count;
    CAPTURE(w);
    CHECK(mform_dim(w) == count);
  }
  CHECK(mform_dim(0) == 1);
  CHECK(mform_dim(2) == 0);
  CHECK(mform_dim(12) == 2);

  auto d24 = extremal_design_strength(24);
  CHECK(d24.t == 11);
  CHECK(d24.extra == std::vector<int>{13, 14, 15});
  auto d8 = extremal_design_strength(8);
  CHECK(d8.t == 7);
  CHECK(d8.extra == std::vector<int>{9, 10, 11});
  auto d16 = extremal_design_strength(16);
  CHECK(d16.t == 3);
  CHECK(d16.extra == std::vector<int>{5, 6, 7});
  for (int c = 8; c <= 96; c += 8) {
    CAPTURE(c);
    CHECK(extremal_design_strength(c).t == extremal_design_strength(c % 24 ? c % 24 : 24).t);
    CHECK(extremal_design_strength(c).minimal_weight == c / 24 + 1);
  }
}

TEST_CASE("A1 lattice character identity") {
  const auto r = a1_identity_check(10);
  CHECK(r.ok);
  CHECK(r.failed_order == -1);
  CHECK(r.trivial.at(0) == 1);
  CHECK(r.trivial.at(1) == 0);
  // Order 1 by hand: weights {-1, 0, 1} form one adjoint, no trivial part.
  const auto refined = a1_refined_character(1);
  CHECK(refined[1].at(0) == 1);
  CHECK(refined[1].at(1) == 1);
  CHECK(su2_decompose(refined[1]) == ints({0, 1}));
  CHECK_THROWS_AS(su2_decompose({{1, Rat(1)}}), std::domain_error);
  CHECK_THROWS_AS(su2_decompose({{0, Rat(0)}, {1, Rat(1)}, {-1, Rat(1)}}), std::domain_error);
}
