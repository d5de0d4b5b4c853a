#include "confdesign/algebra/mpoly.hpp"

#include "confdesign/algebra/upoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confdesign {

const char* var_name(Var v) {
  switch (v) {
    case Var::c: return "c";
    case Var::e: return "e";
    case Var::h: return "h";
    case Var::n: return "n";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned exp) {
  if (exp > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
  return Monomial(static_cast<std::uint64_t>(exp) << shift(v));
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumVars>& exps) {
  std::uint64_t bits = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    bits |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<Var>(i));
  }
  return Monomial(bits);
}

std::array<unsigned, kNumVars> Monomial::exponents() const {
  std::array<unsigned, kNumVars> out{};
  for (int i = 0; i < kNumVars; ++i) out[i] = exponent(static_cast<Var>(i));
  return out;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (int i = 0; i < kNumVars; ++i) d += exponent(static_cast<Var>(i));
  return d;
}

bool Monomial::divides(Monomial other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exponent(static_cast<Var>(i)) > other.exponent(static_cast<Var>(i))) return false;
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  for (int i = 0; i < kNumVars; ++i) {
    const auto v = static_cast<Var>(i);
    if (exponent(v) + other.exponent(v) > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
  }
  return Monomial(bits_ + other.bits_);
}

Monomial Monomial::operator/(Monomial divisor) const { return Monomial(bits_ - divisor.bits_); }

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(const Rat& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

MPoly MPoly::var(Var v) { return monomial(1, Monomial::of(v)); }

MPoly MPoly::monomial(const Rat& coef, Monomial m) {
  MPoly p;
  if (coef != 0) p.terms_.push_back({m, coef});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rat(0) : terms_[0].coef;
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::vector<Var> MPoly::variables() const {
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i)
    if (has_var(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
  return out;
}

bool MPoly::is_univariate(Var* which) const {
  const auto vs = variables();
  if (vs.size() > 1) return false;
  if (which) *which = vs.empty() ? Var::c : vs[0];
  return true;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

// Merges two sorted term lists; sign = +1 or -1 applied to b.
std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                                     int sign) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coef : Rat(-b[j].coef)});
      ++j;
    } else {
      Rat s = sign > 0 ? Rat(a[i].coef + b[j].coef) : Rat(a[i].coef - b[j].coef);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
  } else if (s != 1) {
    for (auto& t : terms_) t.coef *= s;
  }
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].coef;
  if (a.is_constant()) return b * a.terms_[0].coef;
  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& large = a.size() <= b.size() ? b : a;
  // Products with a fixed small-term are already sorted, so accumulate row by
  // row with a linear merge.
  std::vector<MPoly::Term> acc;
  for (const auto& s : small.terms_) {
    std::vector<MPoly::Term> row;
    row.reserve(large.size());
    for (const auto& l : large.terms_) row.push_back({s.mono * l.mono, s.coef * l.coef});
    acc = acc.empty() ? std::move(row) : merge_terms(acc, row, +1);
  }
  MPoly r;
  r.terms_ = std::move(acc);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned k = t.mono.exponent(v);
    if (k == 0) continue;
    out.push_back({t.mono / Monomial::of(v), t.coef * k});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::subs(Var v, const Rat& value) const {
  if (!has_var(v)) return *this;
  std::vector<Rat> powers{Rat(1)};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned k = t.mono.exponent(v);
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    Rat c = t.coef * powers[k];
    if (c != 0) out.push_back({t.mono.without(v), std::move(c)});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::subs(Var v, const MPoly& value) const {
  if (!has_var(v)) return *this;
  auto coeffs = coefficients_in(v);
  MPoly r;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value + coeffs[k];
  return r;
}

Rat MPoly::eval(const std::array<Rat, kNumVars>& point) const {
  Rat sum = 0;
  for (const auto& t : terms_) {
    Rat term = t.coef;
    for (int i = 0; i < kNumVars; ++i) {
      const unsigned k = t.mono.exponent(static_cast<Var>(i));
      if (k) term *= confdesign::pow(point[i], static_cast<long>(k));
    }
    sum += term;
  }
  return sum;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coef});
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MPoly p;
    p.terms_ = std::move(b);  // removing one lane keeps lex order within a bucket
    out.push_back(std::move(p));
  }
  return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_)
      out.push_back({t.mono * Monomial::of(v, static_cast<unsigned>(k)), t.coef});
  return from_terms(std::move(out));
}

Rat MPoly::content() const {
  if (terms_.empty()) return 0;
  Int g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rat c(g, l);
  c.canonicalize();
  if (terms_.front().coef < 0) c = -c;
  return c;
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return {};
  return *this * (Rat(1) / content());
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return {};
  return *this * (Rat(1) / terms_.front().coef);
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coef;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      const auto v = static_cast<Var>(i);
      const unsigned k = t.mono.exponent(v);
      if (!k) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      os << confdesign::to_string(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << confdesign::to_string(c) << "*" << mono;
    }
  }
  return os.str();
}

// ----------------------------------------------------------------- division

std::pair<MPoly, MPoly> divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_constant()) return {a * (Rat(1) / b.constant_value()), MPoly{}};
  std::map<std::uint64_t, Rat, std::greater<>> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono.bits(), t.coef);
  const auto& lead = b.leading_term();
  const Rat inv_lead = Rat(1) / lead.coef;
  std::vector<MPoly::Term> quot, left;
  while (!rem.empty()) {
    auto it = rem.begin();
    MPoly::Term top{Monomial{}, it->second};
    std::array<unsigned, kNumVars> ex{};
    for (int i = 0; i < kNumVars; ++i)
      ex[i] = static_cast<unsigned>((it->first >> (16 * (kNumVars - 1 - i))) & 0xFFFFu);
    top.mono = Monomial::from_exponents(ex);
    rem.erase(it);
    if (!lead.mono.divides(top.mono)) {
      left.push_back(std::move(top));
      continue;
    }
    const Monomial qm = top.mono / lead.mono;
    const Rat qc = top.coef * inv_lead;
    for (std::size_t k = 1; k < b.terms().size(); ++k) {
      const auto& bt = b.terms()[k];
      const auto key = (qm * bt.mono).bits();
      auto [pos, inserted] = rem.emplace(key, Rat(0));
      pos->second -= qc * bt.coef;
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back({qm, qc});
  }
  return {MPoly::from_terms(std::move(quot)), MPoly::from_terms(std::move(left))};
}

bool divides(const MPoly& b, const MPoly& a, MPoly* quotient) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) {
    if (quotient) *quotient = MPoly{};
    return true;
  }
  // Cheap degree screen before the full division.
  for (int i = 0; i < kNumVars; ++i)
    if (b.degree(static_cast<Var>(i)) > a.degree(static_cast<Var>(i))) return false;
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  MPoly q;
  if (!divides(b, a, &q))
    throw std::domain_error("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return q;
}

// ---------------------------------------------------------------------- gcd

namespace {

Monomial monomial_content(const MPoly& p) {
  std::array<unsigned, kNumVars> lo{};
  lo.fill(0xFFFF);
  for (const auto& t : p.terms())
    for (int i = 0; i < kNumVars; ++i) lo[i] = std::min(lo[i], t.mono.exponent(static_cast<Var>(i)));
  return Monomial::from_exponents(lo);
}

MPoly div_monomial(const MPoly& p, Monomial m) {
  if (m.is_one()) return p;
  std::vector<MPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono / m, t.coef});
  return MPoly::from_terms(std::move(out));
}

Monomial monomial_gcd(Monomial a, Monomial b) {
  std::array<unsigned, kNumVars> ex{};
  for (int i = 0; i < kNumVars; ++i)
    ex[i] = std::min(a.exponent(static_cast<Var>(i)), b.exponent(static_cast<Var>(i)));
  return Monomial::from_exponents(ex);
}

MPoly gcd_impl(const MPoly& a, const MPoly& b);

// gcd of the coefficients of p viewed as a polynomial in v.
MPoly content_in(const MPoly& p, Var v) {
  auto coeffs = p.coefficients_in(v);
  MPoly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive_part() : gcd_impl(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

constexpr long kProbe[] = {7, -5, 13, 3, -11, 17, 19, -23};

// Univariate image in x with the other variables set to probe values.
bool specialize(const MPoly& p, Var x, int seed, UPoly& out) {
  std::array<Rat, kNumVars> pt{};
  for (int i = 0; i < kNumVars; ++i) pt[i] = kProbe[(seed + 3 * i) % 8] + seed;
  std::vector<Rat> coeffs(p.degree(x) + 1);
  for (const auto& t : p.terms()) {
    Rat v = t.coef;
    for (int i = 0; i < kNumVars; ++i) {
      const auto var = static_cast<Var>(i);
      if (var == x) continue;
      const unsigned k = t.mono.exponent(var);
      if (k) v *= confdesign::pow(pt[i], static_cast<long>(k));
    }
    coeffs[t.mono.exponent(x)] += v;
  }
  out = UPoly(std::move(coeffs));
  return out.degree() == static_cast<int>(p.degree(x));
}

using Coeffs = std::vector<MPoly>;  // coefficient list in the main variable

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Pseudo-remainder lc(B)^(degA-degB+1) * A mod B.
Coeffs prem(Coeffs r, const Coeffs& b) {
  const int db = static_cast<int>(b.size()) - 1;
  int steps = static_cast<int>(r.size()) - db;
  const MPoly& lb = b.back();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const MPoly lr = r.back();
    const int shift = static_cast<int>(r.size()) - 1 - db;
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[shift + j] -= lr * b[j];
    trim(r);
    --steps;
  }
  if (steps > 0) {
    const MPoly f = lb.pow(static_cast<unsigned>(steps));
    for (auto& x : r) x *= f;
  }
  return r;
}

// Subresultant PRS; a and b primitive in the main variable.
Coeffs subresultant_gcd(Coeffs a, Coeffs b) {
  if (a.size() < b.size()) std::swap(a, b);
  MPoly g(1), h(1);
  for (;;) {
    const int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
    Coeffs r = prem(a, b);
    if (r.empty()) return b;
    if (r.size() == 1) return Coeffs{MPoly(1)};
    a = std::move(b);
    const MPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& x : r) x = exact_div(x, divisor);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
}

MPoly gcd_impl(const MPoly& a0, const MPoly& b0) {
  if (a0.is_zero()) return b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part();
  if (a0.is_constant() || b0.is_constant()) return MPoly(1);
  const Monomial ma = monomial_content(a0), mb = monomial_content(b0);
  const MPoly mono = MPoly::monomial(1, monomial_gcd(ma, mb));
  MPoly a = div_monomial(a0, ma), b = div_monomial(b0, mb);

  // A variable occurring in only one argument can only enter through that
  // argument's content with respect to it.
  for (int i = 0; i < kNumVars; ++i) {
    const auto v = static_cast<Var>(i);
    const bool in_a = a.has_var(v), in_b = b.has_var(v);
    if (in_a && !in_b) a = content_in(a, v);
    if (in_b && !in_a) b = content_in(b, v);
    if (a.is_constant() || b.is_constant()) return mono;
  }

  std::vector<Var> common = a.variables();
  // Degree-zero screen: a univariate image with coprime arguments and no
  // leading-coefficient drop shows the gcd is free of that variable.
  for (Var x : common) {
    for (int seed = 0; seed < 2; ++seed) {
      UPoly ua, ub;
      if (!specialize(a, x, seed, ua) || !specialize(b, x, seed, ub)) continue;
      if (gcd(ua, ub).degree() == 0) return mono * gcd_impl(content_in(a, x), content_in(b, x));
      break;
    }
  }

  Var x = common.front();
  for (Var v : common)
    if (a.degree(v) + b.degree(v) < a.degree(x) + b.degree(x)) x = v;
  const MPoly ca = content_in(a, x), cb = content_in(b, x);
  const MPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
  Coeffs g = subresultant_gcd(pa.coefficients_in(x), pb.coefficients_in(x));
  MPoly gx = MPoly::from_coefficients(x, g);
  if (gx.has_var(x)) gx = exact_div(gx, content_in(gx, x));
  else gx = MPoly(1);
  return (mono * gcd_impl(ca, cb) * gx).primitive_part();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) { return gcd_impl(a, b).primitive_part(); }

}  // namespace confdesign
