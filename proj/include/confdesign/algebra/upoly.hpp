#pragma once

#include <string>
#include <utility>
#include <vector>

#include "confdesign/algebra/mpoly.hpp"
#include "confdesign/algebra/rational.hpp"

namespace confdesign {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i and the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  static UPoly x();

  /// Requires p to involve at most the variable v.
  static UPoly from_mpoly(const MPoly& p, Var v);
  MPoly to_mpoly(Var v) const;

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rat& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return a.c_ != b.c_; }

  Rat eval(const Rat& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct UFactor {
  UPoly factor;  // integer-primitive, positive leading coefficient
  int multiplicity;
};

/// Square-free decomposition: a = lc * prod f_i^i with f_i monic, pairwise
/// coprime and square-free. Entries with f_i = 1 are omitted.
std::vector<UFactor> squarefree_decomposition(const UPoly& a);

/// Complete factorization into irreducibles over Q. Returns the rational
/// content and factors sorted by (degree, coefficients). Throws
/// std::domain_error for the zero polynomial.
std::pair<Rat, std::vector<UFactor>> factor(const UPoly& a);

/// Rational roots (sorted ascending, without multiplicity).
std::vector<Rat> rational_roots(const UPoly& a);

/// Isolating interval of a real root: lo == hi for an exact rational root,
/// otherwise the root is the unique one in the open interval (lo, hi).
struct RootInterval {
  Rat lo, hi;
  bool contains(const Rat& x) const { return lo == hi ? x == lo : lo < x && x < hi; }
};

/// Distinct real roots in ascending order, each interval no wider than
/// `width` (Sturm sequences with exact bisection).
std::vector<RootInterval> real_roots(const UPoly& a, const Rat& width);

/// True when the root lies in [d, d + 10^-k] for the decimal d with k
/// fractional digits, as in a printed truncation "10.04101...".
bool matches_decimal(const UPoly& a, const RootInterval& root, const std::string& decimal);

}  // namespace confdesign
