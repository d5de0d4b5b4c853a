#pragma once

#include <map>
#include <string>
#include <vector>

#include "confdesign/algebra/rational.hpp"

namespace confdesign {

/// Truncated series q^{lead48/48} (a_0 + a_1 q + ... + a_{n-1} q^{n-1} + O(q^n)).
/// Exponents live on the q^{1/48} grid so that c = 1/2 characters fit.
struct QSeries {
  int lead48 = 0;
  std::vector<Rat> coeffs;

  QSeries() = default;
  QSeries(int lead, std::vector<Rat> cs) : lead48(lead), coeffs(std::move(cs)) {}
  /// 1 + O(q^n).
  static QSeries one(std::size_t n);

  /// Relative truncation order n.
  std::size_t order() const { return coeffs.size(); }
  /// Coefficient at relative order i (i < order()).
  const Rat& at(std::size_t i) const { return coeffs.at(i); }
  /// Coefficient of q^{exp48/48}; zero below the lead, throws past the truncation.
  Rat coeff48(int exp48) const;

  QSeries truncated(std::size_t n) const;
  QSeries shifted(int d48) const { return {lead48 + d48, coeffs}; }
  QSeries scaled(const Rat& s) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.lead48 == b.lead48 && a.coeffs == b.coeffs; }

  /// Requires a nonzero leading coefficient (std::domain_error otherwise).
  QSeries inverse() const;
  QSeries pow(int n) const;
  /// The k-th root with leading coefficient 1. Requires a_0 = 1 and lead48
  /// divisible by k.
  QSeries root(int k) const;

  bool integral() const;
  std::string to_string() const;
};

QSeries qs_eta(std::size_t n);
QSeries qs_delta(std::size_t n);
/// Eisenstein series E_4 and E_6 normalized to constant term 1.
QSeries qs_e4(std::size_t n);
QSeries qs_e6(std::size_t n);
QSeries qs_j(std::size_t n);
QSeries qs_cbrt_j(std::size_t n);

/// q^{-c/24} prod_{m>=2} (1 - q^m)^{-1}. Requires 2c to be an integer.
QSeries vacuum_character(const Rat& c, std::size_t n);
/// Character of the simple c = 1/2 Virasoro VOA L(1/2, 0).
QSeries ising_vacuum_character(std::size_t n);

struct ExtremalChar {
  int c = 0;
  int k = 0;
  std::vector<Rat> lambdas;  // coefficient of cbrt(j)^{(c - 24i)/8}
  QSeries series;
  Rat A1, A2;  // A_{k+1}, A_{k+2}
  Rat dim_V2() const { return series.at(2); }
};

/// Character of a putative extremal self-dual VOA of central charge c. n is
/// the relative truncation order and is raised to k + 3 if smaller.
ExtremalChar extremal_character(int c, std::size_t n = 8);

/// Dimension of holomorphic level-one modular forms of the given weight.
int mform_dim(int weight);

struct ExtremalDesign {
  int t = 0;
  std::vector<int> extra;  // further weights s > t + 1 with the same vanishing
  int minimal_weight = 0;  // k + 1
};
ExtremalDesign extremal_design_strength(int c);

/// Example of the A_1 lattice VOA: trivial-representation multiplicity of
/// the lambda-refined character against the c = 1 Virasoro vacuum character.
struct A1Report {
  bool ok = true;
  int failed_order = -1;
  std::vector<Rat> trivial;   // multiplicities at relative orders 0..n
  std::vector<Rat> expected;  // partitions into parts >= 2
};
A1Report a1_identity_check(int n);

/// lambda-Laurent coefficients (weight -> multiplicity) of the A_1 lattice
/// character at relative orders 0..n.
std::vector<std::map<int, Rat>> a1_refined_character(int n);

/// Greedy SU(2) decomposition of a symmetric weight multiset: multiplicity of
/// the irreducible of highest weight i at index i. Throws std::domain_error
/// on asymmetric input or a negative multiplicity.
std::vector<Rat> su2_decompose(const std::map<int, Rat>& weights);

}  // namespace confdesign
