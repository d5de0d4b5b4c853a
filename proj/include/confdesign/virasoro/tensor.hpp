#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confdesign/algebra/ratfunc.hpp"
#include "confdesign/virasoro/verma.hpp"

namespace confdesign {

enum class Slot { a, b };

using TensorKey = std::pair<Partition, Partition>;

/// Element of U_e (x) U_{c-e}, the tensor product of two vacuum quotients
/// (slot a with charge e, slot b with charge c - e), in the PBW basis.
struct TensorVector {
  std::map<TensorKey, RatFunc> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  /// Degree of the support (-1 when zero); throws if not homogeneous.
  int degree() const;
  void add(const TensorKey& k, const RatFunc& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector operator*(const RatFunc& s) const;
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a += b * RatFunc(-1); }
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.coeffs == b.coeffs; }

  /// Applies a substitution to every coefficient.
  TensorVector subs(Var v, const Rat& value) const;
  /// Coefficient of a monomial (zero when absent).
  RatFunc coeff(const Partition& pa, const Partition& pb) const;
  std::string to_string() const;
};

/// Quotient of slot a by the submodule generated by a singular vector,
/// represented by a fixed transversal: each pivot monomial is rewritten in
/// terms of non-pivot monomials of the same degree.
struct SlotQuotient {
  int singular_degree = 0;
  int max_degree = 0;
  VermaVector singular;
  std::map<Partition, std::vector<std::pair<Partition, MPoly>>> rewrite;

  bool is_pivot(const Partition& p) const { return rewrite.count(p) > 0; }
};

/// Builds the quotient data up to max_degree. Pivot monomials are chosen by
/// row reduction with columns in ascending lexicographic order, so the
/// first pivot at the singular degree is L_{-2}^k when it occurs.
SlotQuotient make_quotient(const VermaAction& action, const VermaVector& singular, int max_degree);

class TensorModule {
 public:
  /// charge_a = e, charge_b = c - e; both must be polynomial.
  TensorModule(RatFunc charge_a, RatFunc charge_b, std::optional<SlotQuotient> quotient_a = std::nullopt);

  /// The standard module for symbolic or specialized (c, e).
  static TensorModule vacuum_pair(const RatFunc& c, const RatFunc& e);
  /// The e = 1/2 module with slot a reduced by its degree-6 singular vector.
  static TensorModule half_case(const RatFunc& c, int max_degree = 8);

  const RatFunc& charge(Slot s) const { return s == Slot::a ? charge_a_ : charge_b_; }
  const VermaAction& action(Slot s) const { return s == Slot::a ? *action_a_ : *action_b_; }
  const std::optional<SlotQuotient>& quotient() const { return quotient_a_; }

  /// Basis of slot s in degree k (the transversal for a reduced slot a).
  std::vector<Partition> slot_basis(Slot s, int k) const;
  /// Basis of the degree-n slice, ordered by a-degree then partitions.
  std::vector<TensorKey> basis(int n) const;

  /// Image of L_n (slot s) on one slot monomial, reduced when applicable.
  PTerms slot_apply(Slot s, int n, const Partition& p) const;
  TensorVector lmode_apply(int n, const TensorVector& v, Slot s) const;
  /// Total Virasoro mode L_n = a_n + b_n.
  TensorVector lmode_total(int n, const TensorVector& v) const;
  /// Rewrites pivot monomials of slot a.
  TensorVector reduce(const TensorVector& v) const;

 private:
  RatFunc charge_a_, charge_b_;
  std::shared_ptr<VermaAction> action_a_, action_b_;
  std::optional<SlotQuotient> quotient_a_;
};

/// Charges for which the vacuum quotient has a singular vector in degree
/// <= 8: 0, -22/5, -68/7, 1/2, -46/3, -3/5.
const std::vector<Rat>& degenerate_charges();

/// Basis of the degree-n vectors killed by L_1 and L_2 (total Virasoro).
/// Each basis vector is normalized to coefficient 1 on its leading pure-b
/// monomial (most parts first, then lexicographically smallest), with zero
/// coefficient on the other basis vectors' leading monomials. Throws
/// std::domain_error naming the charge when e or c-e is degenerate and the
/// module does not carry a quotient for it.
std::vector<TensorVector> hw_solve(const TensorModule& module, int n);

/// Convenience: hw_solve on vacuum_pair(c, e), or on half_case(c) when
/// half_case_a is set (then e must be 1/2).
std::vector<TensorVector> hw_solve(int n, const RatFunc& c, const RatFunc& e, bool half_case_a = false);

}  // namespace confdesign
