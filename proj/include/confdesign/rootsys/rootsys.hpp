#pragma once

#include <map>
#include <string>
#include <vector>

#include "confdesign/algebra/ratfunc.hpp"

namespace confdesign {

using RVec = std::vector<Rat>;

Rat dot(const RVec& a, const RVec& b);

/// Root system with exact coordinates. Simply-laced types are scaled to
/// norm 2; B, C, F4 and G2 use the integer realizations
///   B_n: +-e_i, +-e_i +- e_j      C_n: +-2e_i, +-e_i +- e_j
///   F4: +-e_i, (+-1 +-1 +-1 +-1)/2, +-e_i +- e_j      G2: in R^3, coordinates summing to 0.
/// E7 and E6 sit inside the E8 coordinates; "T" is an abelian (rootless) part.
struct RootSystem {
  std::string type;
  int rank = 0;
  int ambient = 0;
  int coxeter = 0;
  std::vector<RVec> roots;

  std::string name() const;
  bool simply_laced() const;
};

/// type in {A, B, C, D, E, F, G, T}. Throws std::domain_error for an invalid rank.
RootSystem build_roots(const std::string& type, int rank);

/// Orthogonal sum with concatenated coordinates.
RootSystem direct_sum(const std::vector<RootSystem>& parts);

/// Standard choice of y: a root for simply-laced types, e1 + e2 for B, C,
/// F4 and e1 - e2 for G2.
RVec default_y(const RootSystem& phi);

/// Polynomial with rational coefficients in nvars variables, keyed by
/// exponent vector.
struct HarmonicPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;

  Rat eval(const RVec& x) const;
  HarmonicPoly laplacian() const;
  bool is_zero() const { return terms.empty(); }
  /// P(w x) for w a signed permutation: x_i -> signs[i] * x_{perm[i]}.
  HarmonicPoly transformed(const std::vector<int>& perm, const std::vector<int>& signs) const;

  static HarmonicPoly monomial(const std::vector<int>& exps, const Rat& coeff = Rat(1));
  friend HarmonicPoly operator+(const HarmonicPoly& a, const HarmonicPoly& b);
  friend HarmonicPoly operator*(const HarmonicPoly& a, const HarmonicPoly& b);
  HarmonicPoly scaled(const Rat& s) const;
};

/// c_{l,k} in R_l = sum_k c_{l,k} (x,y)^{l-2k} (|x|^2 |y|^2)^k, as functions of
/// the dimension n (l = 4 or 6).
std::vector<RatFunc> gegenbauer_coefficients(int l);

/// c_{s,k} for the harmonic projection of (x,y)^s in dimension n, for any
/// degree s >= 0 (the l = 4, 6 cases agree with gegenbauer_coefficients).
std::vector<Rat> zonal_coefficients(int s, const Rat& n);

/// R_l(x) for the dimension parameter n, expanded in y.size() variables.
/// When y.size() == n the result is checked to be harmonic (std::logic_error
/// otherwise).
HarmonicPoly gegenbauer_R(int l, int n, const RVec& y);

/// R_l(x) evaluated through inner products only; equals gegenbauer_R(l, n, y).eval(x).
Rat zonal_eval(int l, int n, const RVec& y, const RVec& x);

/// Sum of P over the roots. P must have phi.ambient variables.
Rat root_sum(const HarmonicPoly& p, const RootSystem& phi);

/// sum over roots of R_l with y = default_y(phi) and n = rank.
Rat root_sum_R(int l, const RootSystem& phi);

struct RootProfile {
  long n0 = 0, n1 = 0, n2 = 0;
};
/// n_i = #{alpha : (y, alpha) = i}; verifies n_2 = 1, n_{-i} = n_i,
/// n_0 + 2n_1 + 2n_2 = |Phi|, |Phi| = rank * h and n_1 = 2h - 4.
/// Throws std::domain_error unless phi is simply laced; std::logic_error if
/// an identity fails.
RootProfile rootcount_profile(const RootSystem& phi, const RVec& y);

enum class Family { simply_laced, A, B, C, D };

/// Root sum of R_l as a rational function of n (and of the Coxeter number
/// in the variable h for the simply-laced family), derived from the
/// (inner product, norm) class counts of each family.
RatFunc family_sum(int l, Family f);

/// Printed closed forms: the simply-laced l = 4, 6 forms and the l = 4 forms
/// for A, B, C, D. Throws std::domain_error for forms not given.
RatFunc closed_form(int l, Family f);

/// closed_form (or family_sum where no closed form exists) at n, cross-checked
/// against root_sum_R on the built system. Throws std::logic_error on mismatch.
Rat closed_form_sum(int l, Family f, int n);

struct HurleySum {
  Rat total;          // sum over Phi of Q(alpha(h1), alpha(h2))
  Rat first, second;  // the two quartic sums
};
/// Q = x1^4 - 6 x1^2 x2^2 + x2^4 with h1, h2 in the Cartan algebras of two
/// distinct components (a nonabelian one first). Throws std::domain_error if
/// there are fewer than two components or all are abelian.
HurleySum hurley_sum(const std::vector<RootSystem>& components);

}  // namespace confdesign
