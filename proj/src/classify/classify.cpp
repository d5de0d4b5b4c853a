#include "confdesign/classify/classify.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace confdesign {

namespace {

RatFunc var(Var v) { return RatFunc::var(v); }

Charges charges_for(bool half_case, const RatFunc& c) {
  return half_case ? Charges{c, RatFunc(frac(1, 2))} : Charges{c, var(Var::e)};
}

MPoly as_primitive(const char* text) {
  const RatFunc r = parse_ratfunc(text);
  return r.num().primitive_part();
}

// Polynomial in h with coefficients in Q(c, e): entry k multiplies h^k.
std::vector<RatFunc> h_coefficients(const RatFunc& x) {
  std::vector<RatFunc> out;
  for (const auto& k : x.num().coefficients_in(Var::h)) out.push_back(RatFunc(k, x.den()));
  return out;
}

}  // namespace

const std::vector<Rat>& half_weights() {
  static const std::vector<Rat> w{Rat(0), frac(1, 2), frac(1, 16)};
  return w;
}

RMatrix DesignSystem::matrix() const {
  const std::size_t cols = unknowns.size();
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (half_case) {
      const auto split = eigensplit_substitute(rows[r], half_weights(),
                                               flavor == Flavor::V2 ? std::vector<Rat>{Rat(2)} : std::vector<Rat>{});
      for (std::size_t i = 0; i < cols; ++i) m(r, i) = split.counts.at(half_weights()[i]);
    } else {
      if (rows[r].max_moment() >= static_cast<int>(cols))
        throw std::logic_error("trace uses moments beyond the system's unknowns");
      for (std::size_t i = 0; i < cols; ++i) m(r, i) = rows[r].moment(static_cast<int>(i));
    }
  }
  return m;
}

std::vector<RatFunc> DesignSystem::rhs() const {
  std::vector<RatFunc> out;
  for (const auto& row : rows) {
    if (half_case && flavor == Flavor::V2)
      out.push_back(-eigensplit_substitute(row, {}, {Rat(2)}).constant);
    else
      out.push_back(-row.beta);
  }
  return out;
}

RatFunc DesignSystem::dimension(const std::vector<RatFunc>& solution) const {
  if (!half_case) return solution.at(0);
  // d_0 already contains b_{-2}1; a_{-2}1 is the explicit eigenvalue-2 vector.
  RatFunc d = flavor == Flavor::V2 ? RatFunc(1) : RatFunc(0);
  for (const auto& x : solution) d += x;
  return d;
}

DesignSystem build_system(Flavor flavor, int strength, bool half_case, const std::vector<TensorVector>& vectors,
                          const RatFunc& c) {
  DesignSystem sys;
  sys.flavor = flavor;
  sys.strength = strength;
  sys.half_case = half_case;
  const Charges ch = charges_for(half_case, c);
  for (const auto& v : vectors)
    sys.rows.push_back(flavor == Flavor::module ? trace_lowest(v, var(Var::h), ch) : trace_V2(v, ch));
  if (half_case) {
    sys.unknowns = {"d_0", "d_1/2", "d_1/16"};
  } else {
    for (std::size_t i = 0; i < vectors.size(); ++i) sys.unknowns.push_back("m_" + std::to_string(i));
  }
  return sys;
}

std::vector<TensorVector> design_vectors(int strength, bool half_case, const RatFunc& c) {
  if (strength != 6 && strength != 8) throw std::domain_error("strength must be 6 or 8");
  std::vector<TensorVector> out;
  if (half_case) {
    const auto module = TensorModule::half_case(c);
    for (int n : {2, 4}) out.push_back(hw_solve(module, n).at(0));
    if (strength == 6) out.push_back(hw_solve(module, 6).at(0));
    return out;
  }
  const auto module = TensorModule::vacuum_pair(c, var(Var::e));
  for (int n : {2, 4}) out.push_back(hw_solve(module, n).at(0));
  for (auto& v : hw_solve(module, strength)) out.push_back(std::move(v));
  return out;
}

MPoly h_condition(const RatFunc& det) {
  const MPoly& num = det.num();
  if (num.is_zero()) throw std::domain_error("determinant vanishes identically");
  MPoly content;
  for (const auto& k : num.coefficients_in(Var::h)) content = gcd(content, k);
  MPoly p = exact_div(num, content);
  const MPoly h = MPoly::var(Var::h);
  MPoly q;
  while (divides(h, p, &q)) p = q;
  return p.primitive_part();
}

bool proportional(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return (a / b).is_constant();
}

MPoly mod6_condition() { return as_primitive("4 + 7*c + c^2 - 124*h - 31*c*h + 248*h^2"); }

MPoly mod8_condition() {
  return as_primitive(
      "(c - 24*h + 12)*(10*c^3 + (141 - 615*h)*c^2 + 2*(5740*h^2 - 3321*h + 171)*c"
      " - 24*(2870*h^3 - 2870*h^2 + 451*h + 15))");
}

MPoly mod8_half_condition() {
  return as_primitive(
      "152700*c^6 + (3535420 - 2546820*h)*c^5 + 2*(5519040*h^2 - 33944388*h + 10007663)*c^4"
      " + (-66228480*h^3 + 505357184*h^2 - 303807330*h + 24963561)*c^3"
      " + (-2634772224*h^3 + 409756928*h^2 + 611923251*h - 162937170)*c^2"
      " + 3*(4450030592*h^3 - 4570094080*h^2 + 1282098891*h - 49633193)*c"
      " + 18*(120063488*h^3 - 120063488*h^2 + 34154597*h - 1236817)");
}

namespace {

ModuleCondition module_condition(const DesignSystem& sys) {
  ModuleCondition out;
  out.determinant = det(sys.matrix());
  out.condition = h_condition(out.determinant);
  return out;
}

}  // namespace

ModuleCondition cond6_module() { return module_condition(build_system(Flavor::module, 6, false, design_vectors(6, false))); }

ModuleCondition cond6_module_half() {
  return module_condition(build_system(Flavor::module, 6, true, design_vectors(6, true)));
}

ModuleCondition cond8_module() { return module_condition(build_system(Flavor::module, 8, false, design_vectors(8, false))); }

HalfDegree8 half_degree8_vector(const MPoly& target) {
  const auto module = TensorModule::half_case(var(Var::c));
  const auto v8 = hw_solve(module, 8);
  if (v8.size() != 2) throw std::logic_error("expected two degree-8 highest weight vectors at e = 1/2");
  auto vectors = design_vectors(8, true);
  vectors.push_back(v8[0]);
  vectors.push_back(v8[1]);
  const DesignSystem all = build_system(Flavor::module, 8, true, vectors);
  const RMatrix m = all.matrix();
  auto minor = [&](std::size_t third) {
    RMatrix s(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      s(0, j) = m(0, j);
      s(1, j) = m(1, j);
      s(2, j) = m(third, j);
    }
    return det(s);
  };
  // det is linear in the last row, so a combination alpha*v8a + beta*v8b
  // gives alpha*Da + beta*Db. Find alpha, beta, lambda in Q(c) with
  // alpha*Da + beta*Db = lambda*h^k*target.
  const RatFunc da = minor(2), db = minor(3);
  const RatFunc h = var(Var::h);
  RatFunc a = da, b = db, t = RatFunc(target);
  auto strip_h = [&](RatFunc& x) {
    while (!x.is_zero() && x.subs(Var::h, Rat(0)).is_zero()) x = x / h;
  };
  strip_h(a);
  strip_h(b);
  const auto ca = h_coefficients(a), cb = h_coefficients(b), ct = h_coefficients(t);
  const std::size_t n = std::max({ca.size(), cb.size(), ct.size()});
  RMatrix sys(n, 3);
  for (std::size_t k = 0; k < n; ++k) {
    if (k < ca.size()) sys(k, 0) = ca[k];
    if (k < cb.size()) sys(k, 1) = cb[k];
    if (k < ct.size()) sys(k, 2) = ct[k];
  }
  const auto ker = kernel(sys);
  if (ker.size() != 1 || ker[0][2].is_zero())
    throw std::logic_error("target condition is not a combination of the degree-8 determinants");
  HalfDegree8 out;
  out.alpha = ker[0][0];
  out.beta = ker[0][1];
  out.vector = module.reduce(v8[0] * out.alpha + v8[1] * out.beta);
  out.module.determinant = da * out.alpha + db * out.beta;
  out.module.condition = h_condition(out.module.determinant);
  return out;
}

RatFunc solve_dimension(const DesignSystem& sys) {
  const auto sol = solve_linear(sys.matrix(), sys.rhs());
  if (sol.singular) throw std::domain_error("design system is singular");
  return sys.dimension(sol.x);
}

RatFunc cond6_V2() {
  const RatFunc d = solve_dimension(build_system(Flavor::V2, 6, false, design_vectors(6, false)));
  if (d.has_var(Var::e)) throw std::logic_error("dimension depends on e");
  return d;
}

HalfSolution cond6_V2_half() {
  const DesignSystem sys = build_system(Flavor::V2, 6, true, design_vectors(6, true));
  const auto sol = solve_linear(sys.matrix(), sys.rhs());
  if (sol.singular) throw std::domain_error("design system is singular");
  return {sys.dimension(sol.x), sol.x};
}

RatFunc cond8_V2() {
  const RatFunc d = solve_dimension(build_system(Flavor::V2, 8, false, design_vectors(8, false)));
  if (d.has_var(Var::e)) throw std::logic_error("dimension depends on e");
  return d;
}

RatFunc cond8_V2_half() {
  auto vectors = design_vectors(8, true);
  vectors.push_back(hw_solve(TensorModule::half_case(var(Var::c)), 8).at(1));
  return solve_dimension(build_system(Flavor::V2, 8, true, vectors));
}

ModuleCondition cond8_module_half() { return half_degree8_vector(mod8_half_condition()).module; }

RatFunc d6_formula() { return parse_ratfunc("c*(2388+955*c+70*c^2)/(2*(748-55*c+c^2))"); }

RatFunc d8_formula() {
  return parse_ratfunc("15*c*(155*c^3+4133*c^2+32074*c+88392)/(20*c^3-2178*c^2+65956*c-595056)");
}

RatFunc d8_half_formula() {
  return parse_ratfunc(
      "-15*c*(5734920*c^5+59136716*c^4+283246086*c^3+2858841411*c^2+7908127017*c-2179288566)"
      "/(260520*c^5-7840184*c^4-72048858*c^3+5528559692*c^2-75371626638*c+17347413996)");
}

Rat evaluate_at(const RatFunc& d, const Rat& c) {
  if (d.den().subs(Var::c, c).is_zero())
    throw std::domain_error("system is singular at c = " + to_string(c));
  return d.subs(Var::c, c).constant_value();
}

std::vector<Rat> d6_d8_intersection() {
  const RatFunc diff = d6_formula() - d8_formula();
  return rational_roots(UPoly::from_mpoly(diff.num(), Var::c));
}

Rat c36_exclusion(const Rat& e) {
  const RatFunc c(Rat(36)), ev(e);
  std::vector<TensorVector> vectors{hw_solve(2, c, ev).at(0), hw_solve(4, c, ev).at(0), hw_solve(6, c, ev).at(0)};
  const auto v8 = hw_solve(8, c, ev);
  vectors.push_back(v8.at(0));
  vectors.push_back(v8.at(1));
  DesignSystem sys;
  sys.flavor = Flavor::V2;
  sys.strength = 8;
  for (const auto& v : vectors) sys.rows.push_back(trace_V2(v, Charges{c, ev}));
  for (int i = 0; i < 5; ++i) sys.unknowns.push_back("m_" + std::to_string(i));
  return solve_dimension(sys).constant_value();
}

std::optional<std::pair<Rat, Rat>> QuadraticRoots::rational() const {
  Rat root;
  if (!rational_sqrt(disc, root)) return std::nullopt;
  return std::make_pair((a - root) / b, (a + root) / b);
}

std::string QuadraticRoots::to_string() const {
  if (auto r = rational()) return confdesign::to_string(r->first) + ", " + confdesign::to_string(r->second);
  return "(" + confdesign::to_string(a) + " +- sqrt(" + confdesign::to_string(disc) + "))/" +
         confdesign::to_string(b);
}

// 248h^2 - (124 + 31c)h + (4 + 7c + c^2) = 0; the discriminant is
// 31(368 + 24c - c^2).
QuadraticRoots solve_h6(const Rat& c) { return {124 + 31 * c, 31 * (368 + 24 * c - c * c), Rat(496)}; }

std::vector<CandidateRow> diophant_scan(unsigned threads) {
  // Any rational c with integral d has denominator dividing 70. Beyond
  // k = 15003885 the fractional part of d stays strictly between 0 and 1.
  constexpr long kMax = 15003885;
  threads = std::max(1u, threads);
  std::vector<std::vector<CandidateRow>> found(threads);
  auto work = [&](unsigned t) {
    const long lo = 1 + kMax * t / threads, hi = kMax * (t + 1) / threads;
    for (long k = lo; k <= hi; ++k) {
      const long g = std::gcd(k, 70L);
      const __int128 p = k / g, q = 70 / g;
      const __int128 num = p * (2388 * q * q + 955 * p * q + 70 * p * p);
      const __int128 den = 2 * q * (748 * q * q - 55 * p * q + p * p);
      if (den <= 0 || num % den != 0) continue;
      const __int128 d = num / den;
      if (d <= 0) continue;
      found[t].push_back({frac(static_cast<long>(p), static_cast<long>(q)), Int(static_cast<long>(d)), std::nullopt});
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  std::vector<CandidateRow> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.c < y.c; });
  return out;
}

std::vector<CandidateRow> rational_h_filter(const std::vector<CandidateRow>& cands) {
  std::vector<CandidateRow> out;
  for (auto row : cands)
    if (auto h = solve_h6(row.c).rational()) {
      row.h = h;
      out.push_back(row);
    }
  return out;
}

namespace {

// Exclusion rules applied when assembling the table.
struct Rule {
  Rat c;
  const char* reason;
};

// Non-self-dual case: needs a module with rational h.
const std::vector<Rule>& non_self_dual_exclusions() {
  static const std::vector<Rule> r{{frac(1, 2), "L_{1/2}(0) has no irreducible module of conformal weight 2"}};
  return r;
}

// Self-dual case: c must be a multiple of 8.
const std::vector<Rule>& self_dual_exclusions() {
  static const std::vector<Rule> r{{Rat(8), "dim V_1 = 248"}, {Rat(16), "dim V_1 = 496"}};
  return r;
}

bool excluded(const std::vector<Rule>& rules, const Rat& c) {
  return std::any_of(rules.begin(), rules.end(), [&](const Rule& r) { return r.c == c; });
}

}  // namespace

std::vector<CandidateRow> table1(unsigned threads) {
  const auto scan = diophant_scan(threads);
  std::vector<CandidateRow> rows;
  for (const auto& row : rational_h_filter(scan))
    if (!excluded(non_self_dual_exclusions(), row.c)) rows.push_back(row);
  for (const auto& row : scan) {
    const bool self_dual_charge = is_integer(row.c) && row.c.get_num() % 8 == 0;
    if (!self_dual_charge || excluded(self_dual_exclusions(), row.c)) continue;
    if (std::none_of(rows.begin(), rows.end(), [&](const auto& r) { return r.c == row.c; })) rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.c < y.c; });
  return rows;
}

std::vector<Rat> fermion_counts(const Rat& c) {
  static std::once_flag once;
  static HalfSolution sol;
  std::call_once(once, [] { sol = cond6_V2_half(); });
  std::vector<Rat> out;
  for (const auto& x : sol.counts) out.push_back(evaluate_at(x, c));
  return out;
}

std::vector<Rat> fermion_feasibility_scan(unsigned threads) {
  std::vector<Rat> out;
  for (const auto& row : diophant_scan(threads)) {
    const auto counts = fermion_counts(row.c);
    if (std::all_of(counts.begin(), counts.end(), [](const Rat& x) { return x >= 0 && is_integer(x); }))
      out.push_back(row.c);
  }
  return out;
}

}  // namespace confdesign
