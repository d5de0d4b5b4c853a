#pragma once

#include <string>
#include <string_view>

#include "confdesign/algebra/mpoly.hpp"

namespace confdesign {

/// Element of Q(c, e, h, n) in canonical form: numerator and denominator
/// coprime, denominator integer-primitive with positive leading coefficient
/// (so it is 1 exactly when the value is a polynomial).
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const MPoly& p) : num_(p), den_(1) {}                // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& x) : num_(x), den_(1) {}                  // NOLINT(google-explicit-constructor)
  RatFunc(long x) : num_(x), den_(1) {}                        // NOLINT(google-explicit-constructor)
  RatFunc(int x) : num_(static_cast<long>(x)), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(const MPoly& num, const MPoly& den);
  static RatFunc var(Var v) { return RatFunc(MPoly::var(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;  // requires is_constant()
  bool has_var(Var v) const { return num_.has_var(v) || den_.has_var(v); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(long k) const;
  /// Throws std::domain_error when the denominator vanishes.
  RatFunc subs(Var v, const Rat& value) const;
  RatFunc subs(Var v, const RatFunc& value) const;
  Rat eval(const std::array<Rat, kNumVars>& point) const;

  /// "num" or "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  MPoly num_;
  MPoly den_{1};
};

/// Parses +, -, *, /, ^ (integer exponents), parentheses, integers and the
/// variables c, e, h, n. Throws std::invalid_argument on malformed input.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace confdesign
