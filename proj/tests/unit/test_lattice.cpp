#include <doctest.h>

#include <random>

#include "confdesign/lattice/lattice.hpp"

using namespace confdesign;

namespace {

std::string data(const std::string& f) { return std::string(CONFDESIGN_DATA_DIR) + "/lattices/" + f; }

// Naive box enumeration oracle for small norms: |x_i| <= r in the Gram basis.
long naive_count(const Lattice& l, const Rat& norm, long r) {
  const int n = l.dim();
  IVec x(n, -r);
  long count = 0;
  while (true) {
    if (l.inner(x, x) == norm) ++count;
    int i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

std::vector<IVec> random_unimodular(int n, std::mt19937& rng) {
  std::vector<IVec> u(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-1, 1);
  for (int step = 0; step < 12; ++step) {
    const int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (int k = 0; k < n; ++k) u[i][k] += c * u[j][k];
  }
  return u;
}

}  // namespace

TEST_CASE("lattice loading and validation") {
  const auto e8 = load_lattice(data("e8.gram"));
  CHECK(e8.dim() == 8);
  CHECK(det(e8.gram) == 1);
  CHECK(det(load_lattice(data("d16plus.gram")).gram) == 1);
  CHECK(det(load_lattice(data("bw16.gram")).gram) == 256);
  CHECK(load_lattice(data("a1.gram")).dim() == 1);
  QMatrix bad(2, 2);
  bad(0, 0) = 1;
  bad(1, 1) = -1;
  CHECK_THROWS_AS(make_lattice("bad", bad), std::domain_error);
  bad(1, 1) = 1;
  bad(0, 1) = 2;
  CHECK_THROWS_AS(make_lattice("asym", bad), std::domain_error);
}

TEST_CASE("shell enumeration") {
  const auto e8 = load_lattice(data("e8.gram"));
  const auto s2 = shell_enum(e8, Rat(2));
  const auto s4 = shell_enum(e8, Rat(4));
  CHECK(s2.vectors.size() == 240);
  CHECK(s4.vectors.size() == 2160);
  CHECK(s2.negation_closed());
  CHECK(s4.negation_closed());
  for (const auto& v : s4.vectors) CHECK(e8.inner(v, v) == 4);
  CHECK(shell_enum(e8, Rat(4), 3).vectors == s4.vectors);
  CHECK(shell_enum(e8, Rat(3)).vectors.empty());

  const auto a1 = load_lattice(data("a1.gram"));
  CHECK(shell_enum(a1, Rat(2)).vectors == std::vector<IVec>{{-1}, {1}});

  // Box oracle on a small lattice (A2), where coordinates are bounded by 3.
  QMatrix a2(2, 2);
  a2(0, 0) = a2(1, 1) = 2;
  a2(0, 1) = a2(1, 0) = -1;
  const auto la2 = make_lattice("A2", a2);
  for (int norm : {2, 4, 6, 8, 14}) CHECK(long(shell_enum(la2, Rat(norm)).vectors.size()) == naive_count(la2, Rat(norm), 6));

  // E8 theta series: coefficients of E4.
  const auto theta = harmonic_theta(e8, HarmonicPoly::monomial(std::vector<int>(8, 0)), 3);
  CHECK(theta.coeffs == qs_e4(3).coeffs);
}

TEST_CASE("harmonic bases") {
  CHECK(harm_basis(2, 1).size() == 2);
  CHECK(harm_basis(1, 2).empty());
  for (int n = 1; n <= 6; ++n) CHECK(int(harm_basis(n, 2).size()) == n * (n + 1) / 2 - 1);
  CHECK(harm_basis(3, 4).size() == 9);  // 2s + 1
  const auto e8 = load_lattice(data("e8.gram"));
  const auto basis = harm_basis(8, 2, e8.gram);
  CHECK(basis.size() == 35);
  const auto s2 = shell_enum(e8, Rat(2));
  for (const auto& p : basis) CHECK(harmonic_sum(s2, p) == 0);
  for (const auto& p : harm_basis(8, 3, e8.gram)) CHECK(harmonic_sum(s2, p) == 0);

  // Zonal harmonics are harmonic for the Gram Laplacian.
  QMatrix ginv(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    std::vector<Rat> e(8, Rat(0));
    e[j] = 1;
    const auto r = solve_linear(e8.gram, e);
    for (std::size_t i = 0; i < 8; ++i) ginv(i, j) = r.x[i];
  }
  for (int s : {2, 4, 6}) CHECK(gram_laplacian(zonal_harmonic(e8, s, s2.vectors[5]), ginv).is_zero());
}

TEST_CASE("E8 shells are 7-designs") {
  const auto e8 = load_lattice(data("e8.gram"));
  for (int norm : {2, 4}) {
    const auto s = shell_enum(e8, Rat(norm));
    const auto r = design_report(s, 8);
    CAPTURE(norm);
    CHECK(r.t == 7);
    CHECK(r.failed_degree == 8);
    CHECK(sgn(r.witness_sum) != 0);
    // The witness is an explicit harmonic polynomial with nonzero shell sum.
    const auto w = zonal_harmonic(e8, 8, r.witness_pole);
    CHECK(harmonic_sum(s, w) == r.witness_sum);
    for (int deg = 2; deg <= 7; deg += 2) CHECK(zonal_pair_sum(s, deg) == 0);
    // Random zonal probes of degree 4 and 6 vanish as well.
    for (std::size_t i = 0; i < s.vectors.size(); i += s.vectors.size() / 3)
      for (int deg : {4, 6}) CHECK(harmonic_sum(s, zonal_harmonic(e8, deg, s.vectors[i])) == 0);
  }
  const auto a1 = shell_enum(load_lattice(data("a1.gram")), Rat(2));
  CHECK(design_strength(a1, 8) == 8);
}

TEST_CASE("design strength under base change") {
  std::mt19937 rng(5);
  const auto e8 = load_lattice(data("e8.gram"));
  for (int trial = 0; trial < 3; ++trial) {
    const auto l = base_change(e8, random_unimodular(8, rng));
    const auto s = shell_enum(l, Rat(2));
    CHECK(s.vectors.size() == 240);
    CHECK(design_strength(s, 8) == 7);
  }
}

TEST_CASE("harmonic theta series") {
  const auto e8 = load_lattice(data("e8.gram"));
  const auto s2 = shell_enum(e8, Rat(2));
  for (int deg = 1; deg <= 7; ++deg) {
    const auto p = zonal_harmonic(e8, deg, s2.vectors[17]);
    const auto th = harmonic_theta(e8, p, 3);
    for (const auto& c : th.coeffs) CHECK(c == 0);
  }
  const auto a1 = load_lattice(data("a1.gram"));
  CHECK_THROWS_AS(harmonic_theta(a1, HarmonicPoly::monomial({4}), 3), std::domain_error);
  const auto th = harmonic_theta(a1, HarmonicPoly::monomial({0}), 5);
  CHECK(th.coeffs == std::vector<Rat>{1, 2, 0, 0, 2});
}
