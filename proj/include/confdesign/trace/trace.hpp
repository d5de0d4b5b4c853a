#pragma once

#include <map>
#include <string>
#include <vector>

#include "confdesign/algebra/ratfunc.hpp"
#include "confdesign/virasoro/tensor.hpp"
#include "json.hpp"

namespace confdesign {

/// One mode letter: L_index of slot a or b (Virasoro words), or h_index of
/// a single Heisenberg field (slot ignored).
struct Letter {
  Slot slot = Slot::a;
  int index = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Letters = std::vector<Letter>;

/// scalar * letters[0] letters[1] ... (rightmost letter acts first).
struct ModeWord {
  RatFunc scalar;
  Letters letters;
  std::string to_string() const;
};

/// Affine form beta + sum_i alpha_i m_i in the moments m_i = tr(a_0^i);
/// m_0 is the dimension of the space traced over.
struct TraceExpr {
  RatFunc beta;
  std::map<int, RatFunc> alpha;

  RatFunc moment(int i) const;
  TraceExpr& operator+=(const TraceExpr& o);
  TraceExpr operator*(const RatFunc& s) const;
  friend TraceExpr operator+(TraceExpr a, const TraceExpr& b) { return a += b; }
  friend bool operator==(const TraceExpr& a, const TraceExpr& b) { return a.beta == b.beta && a.alpha == b.alpha; }

  TraceExpr subs(Var v, const RatFunc& value) const;
  /// beta + sum alpha_i * moments[i]; missing moments count as zero.
  RatFunc evaluate(const std::vector<RatFunc>& moments) const;
  int max_moment() const { return alpha.empty() ? -1 : alpha.rbegin()->first; }
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Central charges used to interpret a trace: slot a carries e, slot b c - e.
struct Charges {
  RatFunc c = RatFunc::var(Var::c);
  RatFunc e = RatFunc::var(Var::e);
};

/// o(v) = v_(deg v - 1) as a sum of mode words, valid on states of degree
/// at most ambient_degree above the lowest degree of the module. Terms whose
/// innermost operator would leave the admissible degree range are dropped.
std::vector<ModeWord> omode_expand(const TensorVector& v, int ambient_degree);

/// Trace of o(v) on the lowest space W_h of a module of conformal weight h,
/// as a form in m_i* = tr|W_h a_0^i (beta = 0).
TraceExpr trace_lowest(const TensorVector& v, const RatFunc& h, const Charges& charges = {});

/// Lowest-space trace of an explicit sum of mode words.
TraceExpr trace_words_lowest(const std::vector<ModeWord>& words, const RatFunc& h, const Charges& charges = {});

/// Trace of o(v) on V_2 of a VOA with V_1 = 0 containing the tensor vacuum
/// module. The caller asserts V_1 = 0 by calling this function.
TraceExpr trace_V2(const TensorVector& v, const Charges& charges = {});

/// Direct trace of o(v) on the slice {a_{-2}1, b_{-2}1} of the vacuum
/// tensor module (the explicit part of trace_V2).
RatFunc trace_vacuum_block(const TensorVector& v, const Charges& charges = {});

/// Affine form in the multiplicities d_l of the a_0 eigenvalues l.
struct EigenSplit {
  RatFunc constant;
  std::map<Rat, RatFunc> counts;
  std::string to_string() const;
};

/// Substitutes m_i = sum_{x in explicit_values} x^i + sum_l d_l l^i.
EigenSplit eigensplit_substitute(const TraceExpr& t, const std::vector<Rat>& weights,
                                 const std::vector<Rat>& explicit_values = {});

/// Word of modes of weight-one fields a^k: (k, n) stands for a^k_(n).
struct FieldWord {
  std::vector<std::pair<int, int>> letters;
  std::string to_string() const;
  friend auto operator<=>(const FieldWord&, const FieldWord&) = default;
};

/// o(a^1_(-1) ... a^l_(-1) 1) restricted to V_1, for a VOA with V_0 = C 1,
/// obtained by repeated use of the associativity relation.
std::vector<FieldWord> v1_trace_expand(int l);

/// Heisenberg field h with [h_m, h_n] = m <h,h> delta_{m+n,0}.
/// o(v) for a Fock monomial h_{-p_1} ... h_{-p_k} 1 on states of degree <= 1,
/// normal ordered (positive modes rightmost), keyed by mode list.
std::map<std::vector<int>, Rat> heisenberg_omode(const std::vector<int>& parts, const Rat& norm);

/// Evaluates tr|_{V_1} o(v) for v = (8h_{-3}h_{-1} - 6h_{-2}^2 - 2h_{-1}^4)1
/// under the abelian rules h_0 = 0 on V_1 and tr h_{-1}h_1 = <h,h>. Also checks
/// that v is killed by L'_1 and L'_2; throws std::logic_error otherwise.
Rat heisenberg_trace_check(const Rat& norm);

}  // namespace confdesign
