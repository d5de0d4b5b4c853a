#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "confdesign/algebra/rational.hpp"

namespace confdesign {

/// Variable slots of the coefficient field. c, e, h are the central charge,
/// the sub-Virasoro charge and the conformal weight; n is a rank parameter
/// used only by the root-system closed forms.
enum class Var : int { c = 0, e = 1, h = 2, n = 3 };
inline constexpr int kNumVars = 4;

const char* var_name(Var v);

/// Exponent vector packed into 16-bit lanes with c in the most significant
/// lane, so integer comparison is the lexicographic order c > e > h > n.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial of(Var v, unsigned exp = 1);
  static Monomial from_exponents(const std::array<unsigned, kNumVars>& exps);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((bits_ >> shift(v)) & 0xFFFFu);
  }
  std::array<unsigned, kNumVars> exponents() const;
  unsigned total_degree() const;
  bool is_one() const { return bits_ == 0; }

  bool divides(Monomial other) const;
  Monomial operator*(Monomial other) const;
  /// Requires divides(other) on the receiver's divisor.
  Monomial operator/(Monomial divisor) const;
  Monomial without(Var v) const { return Monomial(bits_ & ~(std::uint64_t{0xFFFF} << shift(v))); }

  std::uint64_t bits() const { return bits_; }
  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits_ != b.bits_; }
  friend bool operator<(Monomial a, Monomial b) { return a.bits_ < b.bits_; }
  friend bool operator>(Monomial a, Monomial b) { return a.bits_ > b.bits_; }

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  static constexpr int shift(Var v) { return 16 * (kNumVars - 1 - static_cast<int>(v)); }
  std::uint64_t bits_ = 0;
};

/// Sparse polynomial over Q in the variables c, e, h, n. Terms are kept in
/// strictly decreasing lex order with no zero coefficients, so structural
/// equality is mathematical equality.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    Rat coef;
  };

  MPoly() = default;
  MPoly(const Rat& constant);                // NOLINT(google-explicit-constructor)
  MPoly(long constant) : MPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  static MPoly var(Var v);
  static MPoly monomial(const Rat& coef, Monomial m);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rat constant_value() const;  // requires is_constant()
  Rat constant_term() const;
  const Term& leading_term() const { return terms_.front(); }
  Rat leading_coefficient() const { return terms_.empty() ? Rat(0) : terms_.front().coef; }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool has_var(Var v) const { return degree(v) > 0; }
  /// Variables that occur, in slot order.
  std::vector<Var> variables() const;
  /// The single variable when at most one occurs (Var::c for constants).
  bool is_univariate(Var* which = nullptr) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned k) const;
  MPoly derivative(Var v) const;
  /// Substitutes a rational for one variable.
  MPoly subs(Var v, const Rat& value) const;
  /// Substitutes a polynomial for one variable.
  MPoly subs(Var v, const MPoly& value) const;
  /// Evaluates with values for every variable that occurs.
  Rat eval(const std::array<Rat, kNumVars>& point) const;

  /// Coefficients with respect to v: result[k] is the coefficient of v^k.
  std::vector<MPoly> coefficients_in(Var v) const;
  static MPoly from_coefficients(Var v, const std::vector<MPoly>& coeffs);

  /// Positive rational c with p = c * (integer polynomial with coprime
  /// coefficients); sign chosen so the primitive part has positive leading
  /// coefficient.
  Rat content() const;
  MPoly primitive_part() const;
  /// Scales so the leading coefficient is 1.
  MPoly monic() const;

  std::string to_string() const;

 private:
  void normalize();  // sort, merge, drop zeros
  std::vector<Term> terms_;
};

/// Quotient and remainder of lex-order division by a single polynomial.
std::pair<MPoly, MPoly> divide(const MPoly& a, const MPoly& b);
/// a / b, throwing std::domain_error when b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);
/// True when b divides a; stores the quotient when `quotient` is given.
bool divides(const MPoly& b, const MPoly& a, MPoly* quotient = nullptr);

/// Greatest common divisor, integer-primitive with positive leading
/// coefficient (gcd(0, 0) = 0).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace confdesign
