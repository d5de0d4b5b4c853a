#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confdesign/algebra/matrix.hpp"
#include "confdesign/algebra/upoly.hpp"
#include "confdesign/trace/trace.hpp"

namespace confdesign {

enum class Flavor { module, V2 };

/// Linear system given by the vanishing of tr o(v) for a list of highest
/// weight vectors. Generic unknowns are the moments m_0 .. m_{k-1}; in the
/// half case (e = 1/2) they are the eigenspace dimensions d_0, d_{1/2},
/// d_{1/16}.
struct DesignSystem {
  Flavor flavor = Flavor::module;
  int strength = 6;
  bool half_case = false;
  std::vector<TraceExpr> rows;
  std::vector<std::string> unknowns;

  RMatrix matrix() const;
  /// Right-hand side: minus the constant part of each row.
  std::vector<RatFunc> rhs() const;
  /// dim of the traced space expressed in the unknowns' solution.
  RatFunc dimension(const std::vector<RatFunc>& solution) const;
};

/// The a_0 eigenvalues on modules of the simple c = 1/2 Virasoro VOA.
const std::vector<Rat>& half_weights();

/// Builds the system for explicit vectors. Module rows are traced on W_h with
/// symbolic h. In the half case e is fixed to 1/2.
DesignSystem build_system(Flavor flavor, int strength, bool half_case, const std::vector<TensorVector>& vectors,
                          const RatFunc& c = RatFunc::var(Var::c));

/// v2, v4 and the kernel basis in degree 6 (strength 6) or 8 (strength 8).
/// In the half case the quotient module at e = 1/2 is used and only its
/// degree-6 vector (strength 6) is appended; for strength 8 see
/// half_degree8_vector.
std::vector<TensorVector> design_vectors(int strength, bool half_case, const RatFunc& c = RatFunc::var(Var::c));

/// Result of a homogeneous (module) condition.
struct ModuleCondition {
  RatFunc determinant;  // in c, e, h (or c, h in the half case)
  MPoly condition;      // integer-primitive polynomial in c and h
};

/// (c,h)-dependent factor of a determinant: the primitive part with
/// respect to h with all factors h removed.
MPoly h_condition(const RatFunc& det);

/// True when a / b is a nonzero rational constant.
bool proportional(const RatFunc& a, const RatFunc& b);

ModuleCondition cond6_module();
ModuleCondition cond6_module_half();
ModuleCondition cond8_module();

/// Degree-8 highest weight vector at e = 1/2 chosen so that, with v2 and v4,
/// the module determinant is proportional to the target condition. Throws
/// std::logic_error if the condition is not in the span of the two basis
/// determinants.
struct HalfDegree8 {
  TensorVector vector;
  RatFunc alpha, beta;  // vector = alpha * v8a + beta * v8b
  ModuleCondition module;
};
HalfDegree8 half_degree8_vector(const MPoly& target_condition);
/// half_degree8_vector(mod8_half_condition()).module
ModuleCondition cond8_module_half();

/// The printed half-case degree-8 condition as a polynomial in c and h.
MPoly mod8_half_condition();
/// The printed generic degree-8 condition.
MPoly mod8_condition();
/// 4 + 7c + c^2 - 124h - 31ch + 248h^2.
MPoly mod6_condition();

/// Solution for d = dim V_2 of the inhomogeneous system.
RatFunc solve_dimension(const DesignSystem& sys);

/// d(c) from the strength-6 V_2 system; the generic result is checked to be
/// independent of e.
RatFunc cond6_V2();
/// Half case: d and the eigenspace dimensions (d_0, d_{1/2}, d_{1/16}).
struct HalfSolution {
  RatFunc d;
  std::vector<RatFunc> counts;
};
HalfSolution cond6_V2_half();
RatFunc cond8_V2();
/// Half case of strength 8 with v2, v4 and the second degree-8 kernel
/// vector at e = 1/2.
RatFunc cond8_V2_half();

/// Printed closed forms.
RatFunc d6_formula();
RatFunc d8_formula();
RatFunc d8_half_formula();

/// Evaluates a d(c) formula, throwing std::domain_error when its
/// denominator vanishes (the system is singular there).
Rat evaluate_at(const RatFunc& d, const Rat& c);

/// Rational roots of d6(c) = d8(c).
std::vector<Rat> d6_d8_intersection();

/// d at c = 36 from the system {v2, v4, v6a, v8a, v8b} at the given e.
Rat c36_exclusion(const Rat& e = frac(7, 3));

/// h = (a + s sqrt(disc)) / b for s = -1, +1.
struct QuadraticRoots {
  Rat a, disc, b;
  bool is_real() const { return disc >= 0; }
  /// Both roots ascending when disc is a rational square.
  std::optional<std::pair<Rat, Rat>> rational() const;
  std::string to_string() const;
};

/// Roots in h of 4 + 7c + c^2 - 124h - 31ch + 248h^2 = 0.
QuadraticRoots solve_h6(const Rat& c);

struct CandidateRow {
  Rat c;
  Int d;
  std::optional<std::pair<Rat, Rat>> h;
};

/// All positive rational c with d6(c) a positive integer (c = k/70,
/// 1 <= k <= 15003885), ascending.
std::vector<CandidateRow> diophant_scan(unsigned threads = 1);

/// Candidates for which h is rational.
std::vector<CandidateRow> rational_h_filter(const std::vector<CandidateRow>& cands);

/// Table of possible central charges, dim V_2 and h.
std::vector<CandidateRow> table1(unsigned threads = 1);

/// Eigenspace dimensions (d_0, d_{1/2}, d_{1/16}) of V_2 at c, assuming
/// L_{1/2}(0) in V and the strength-6 design property.
std::vector<Rat> fermion_counts(const Rat& c);

/// Candidates whose three counts are nonnegative integers.
std::vector<Rat> fermion_feasibility_scan(unsigned threads = 1);

}  // namespace confdesign
