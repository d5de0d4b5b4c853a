#include "confdesign/algebra/upoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace confdesign {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

UPoly UPoly::x() { return UPoly(std::vector<Rat>{0, 1}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& p, Var v) {
  std::vector<Rat> out(p.degree(v) + 1);
  for (const auto& t : p.terms()) {
    if (t.mono.without(v) != Monomial{})
      throw std::domain_error("polynomial is not univariate in " + std::string(var_name(v)) + ": " +
                              p.to_string());
    out[t.mono.exponent(v)] = t.coef;
  }
  return UPoly(std::move(out));
}

MPoly UPoly::to_mpoly(Var v) const {
  std::vector<MPoly::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.push_back({Monomial::of(v, static_cast<unsigned>(i)), c_[i]});
  return MPoly::from_terms(std::move(terms));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const Rat& s) {
  std::vector<Rat> out = a.c_;
  for (auto& x : out) x *= s;
  return UPoly(std::move(out));
}

Rat UPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const { return is_zero() ? UPoly{} : *this * (Rat(1) / lc()); }

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Int g = 0, l = 1;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  Rat scale(l, g);
  scale.canonicalize();
  if (lc() < 0) scale = -scale;
  return *this * scale;
}

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string s = to_mpoly(Var::c).to_string();
  if (std::string(var) == "c") return s;
  std::string out;
  for (char ch : s) {
    if (ch == 'c') out += var;
    else out += ch;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rat> q(a.degree() - db + 1);
  const Rat inv = Rat(1) / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rat f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<UFactor> squarefree_decomposition(const UPoly& a) {
  if (a.is_zero()) throw std::domain_error("square-free decomposition of zero");
  std::vector<UFactor> out;
  if (a.degree() == 0) return out;
  // Yun's algorithm.
  UPoly f = a.monic();
  UPoly d = f.derivative();
  UPoly g = gcd(f, d);
  UPoly b = divmod(f, g).first;
  UPoly c = divmod(d, g).first - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly h = gcd(b, c);
    if (h.degree() > 0) out.push_back({h, i});
    UPoly nb = divmod(b, h).first;
    c = divmod(c, h).first - nb.derivative();
    b = nb;
  }
  return out;
}

// ------------------------------------------------------------------------
// Factorization of a square-free integer polynomial: Cantor-Zassenhaus
// modulo a prime larger than twice the Mignotte-type coefficient bound,
// followed by factor recombination over Z.

namespace {

using ZpPoly = std::vector<Int>;  // ascending coefficients in [0, p)

struct Zp {
  Int p;

  Int mod(const Int& x) const {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  Int inv(const Int& x) const {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t())) throw std::domain_error("non-invertible mod p");
    return r;
  }
  static void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      Int x = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
      r[i] = mod(x);
    }
    trim(r);
    return r;
  }
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& x : r) x = mod(x);
    trim(r);
    return r;
  }
  // Returns remainder, stores quotient when requested.
  ZpPoly rem(ZpPoly a, const ZpPoly& b, ZpPoly* quot = nullptr) const {
    const std::size_t db = b.size() - 1;
    const Int inv_lc = inv(b.back());
    if (quot) quot->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
    while (a.size() >= b.size()) {
      const Int f = mod(a.back() * inv_lc);
      const std::size_t shift = a.size() - b.size();
      if (quot) (*quot)[shift] = f;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - f * b[j]);
      trim(a);
    }
    return a;
  }
  ZpPoly monic(const ZpPoly& a) const {
    if (a.empty()) return a;
    const Int il = inv(a.back());
    ZpPoly r = a;
    for (auto& x : r) x = mod(x * il);
    return r;
  }
  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ZpPoly powmod(ZpPoly base, Int e, const ZpPoly& m) const {
    ZpPoly result{Int(1)};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), m);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), m);
    }
    return result;
  }
};

ZpPoly random_poly(gmp_randclass& rng, const Int& p, std::size_t len) {
  ZpPoly r(len);
  for (auto& x : r) x = rng.get_z_range(p);
  Zp::trim(r);
  return r;
}

void equal_degree_split(const Zp& F, const ZpPoly& g, int d, gmp_randclass& rng, std::vector<ZpPoly>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Int pd;
  mpz_pow_ui(pd.get_mpz_t(), F.p.get_mpz_t(), static_cast<unsigned long>(d));
  const Int e = (pd - 1) / 2;
  for (;;) {
    ZpPoly r = random_poly(rng, F.p, static_cast<std::size_t>(n));
    if (r.size() < 2) continue;
    ZpPoly t = F.sub(F.powmod(r, e, g), ZpPoly{Int(1)});
    ZpPoly u = F.gcd(t, g);
    const int du = static_cast<int>(u.size()) - 1;
    if (du > 0 && du < n) {
      ZpPoly q;
      F.rem(g, u, &q);
      equal_degree_split(F, u, d, rng, out);
      equal_degree_split(F, F.monic(q), d, rng, out);
      return;
    }
  }
}

std::vector<ZpPoly> factor_mod_p(const Zp& F, ZpPoly f, gmp_randclass& rng) {
  std::vector<ZpPoly> out;
  f = F.monic(f);
  const ZpPoly x{Int(0), Int(1)};
  ZpPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, F.p, f);
    ZpPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      equal_degree_split(F, g, d, rng, out);
      ZpPoly q;
      F.rem(f, g, &q);
      f = F.monic(q);
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

std::vector<Int> to_int_coeffs(const UPoly& f) {
  std::vector<Int> out;
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw std::logic_error("expected integer polynomial");
    out.push_back(c.get_num());
  }
  return out;
}

UPoly symmetric_lift(const ZpPoly& a, const Int& p) {
  const Int half = p / 2;
  std::vector<Rat> out;
  for (const auto& x : a) out.emplace_back(x > half ? Int(x - p) : x);
  return UPoly(std::move(out));
}

bool squarefree_mod(const Zp& F, const std::vector<Int>& f) {
  ZpPoly fp;
  for (const auto& c : f) fp.push_back(F.mod(c));
  Zp::trim(fp);
  ZpPoly df;
  for (std::size_t i = 1; i < fp.size(); ++i) df.push_back(F.mod(fp[i] * static_cast<unsigned long>(i)));
  Zp::trim(df);
  if (df.empty()) return false;
  return F.gcd(fp, df).size() == 1;
}

std::vector<UPoly> factor_squarefree_primitive(const UPoly& f0) {
  if (f0.degree() <= 1) return {f0};
  const auto fi = to_int_coeffs(f0);
  Int maxc = 0;
  for (const auto& c : fi) maxc = std::max(maxc, Int(abs(c)));
  const int n = f0.degree();
  Int bound = abs(fi.back()) * maxc * (n + 1);
  bound <<= static_cast<unsigned>(n);
  Int p;
  Int start = 2 * bound + 1;
  mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
  Zp F{p};
  while (!squarefree_mod(F, fi)) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    F.p = p;
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240601UL);
  ZpPoly fp;
  for (const auto& c : fi) fp.push_back(F.mod(c));
  std::vector<ZpPoly> modular = factor_mod_p(F, fp, rng);

  std::vector<UPoly> result;
  UPoly f = f0;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      const Int lc = f.lc().get_num();
      ZpPoly g{F.mod(lc)};
      for (auto i : idx) g = F.mul(g, modular[i]);
      UPoly cand = symmetric_lift(g, p).primitive();
      auto [q, r] = divmod(f, cand);
      if (r.is_zero()) {
        result.push_back(cand);
        f = q.primitive();
        std::vector<ZpPoly> rest;
        for (std::size_t i = 0, k = 0; i < modular.size(); ++i) {
          if (k < s && idx[k] == i) {
            ++k;
            continue;
          }
          rest.push_back(modular[i]);
        }
        modular = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == modular.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.degree() > 0) result.push_back(f);
  return result;
}

bool factor_less(const UFactor& a, const UFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coeffs();
  const auto& cb = b.factor.coeffs();
  for (std::size_t i = ca.size(); i-- > 0;)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::pair<Rat, std::vector<UFactor>> factor(const UPoly& a) {
  if (a.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<UFactor> out;
  UPoly product(Rat(1));
  for (const auto& [sf, mult] : squarefree_decomposition(a)) {
    for (const auto& irr : factor_squarefree_primitive(sf.primitive())) {
      out.push_back({irr, mult});
      for (int k = 0; k < mult; ++k) product = product * irr;
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  const Rat content = a.lc() / product.lc();
  return {content, out};
}

std::vector<Rat> rational_roots(const UPoly& a) {
  std::vector<Rat> roots;
  for (const auto& f : factor(a).second)
    if (f.factor.degree() == 1) roots.push_back(-f.factor.coeff(0) / f.factor.coeff(1));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace confdesign

namespace confdesign {

namespace {

int sign_changes(const std::vector<UPoly>& seq, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rat parse_decimal(const std::string& text, int& digits) {
  const auto dot = text.find('.');
  digits = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  std::string joined = text;
  if (dot != std::string::npos) joined.erase(dot, 1);
  return Rat(Int(joined)) / pow(Rat(10), digits);
}

}  // namespace

std::vector<RootInterval> real_roots(const UPoly& a, const Rat& width) {
  if (a.is_zero()) throw std::domain_error("real roots of the zero polynomial");
  if (a.degree() == 0) return {};
  const UPoly p = divmod(a, gcd(a, a.derivative())).first;
  std::vector<UPoly> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  Rat bound = 0;
  for (const auto& c : p.coeffs()) bound = std::max(bound, Rat(abs(c / p.lc())));
  bound += 1;

  std::vector<RootInterval> out;
  // Roots in the half-open interval (lo, hi]; neither endpoint is a root
  // except possibly hi, which is handled by exact evaluation.
  std::function<void(Rat, Rat, int)> isolate = [&](Rat lo, Rat hi, int count) {
    if (count == 0) return;
    if (count == 1 && hi - lo <= width) {
      if (p.eval(hi) == 0)
        out.push_back({hi, hi});
      else
        out.push_back({lo, hi});
      return;
    }
    const Rat mid = (lo + hi) / 2;
    const int left = sign_changes(seq, lo) - sign_changes(seq, mid);
    isolate(lo, mid, left);
    isolate(mid, hi, count - left);
  };
  isolate(-bound, bound, sign_changes(seq, -bound) - sign_changes(seq, bound));
  for (auto& r : out)
    if (r.lo != r.hi && p.eval(r.hi) == 0) r.lo = r.hi;
  return out;
}

bool matches_decimal(const UPoly& a, const RootInterval& root, const std::string& decimal) {
  int digits = 0;
  const bool negative = !decimal.empty() && decimal[0] == '-';
  const Rat d = parse_decimal(negative ? decimal.substr(1) : decimal, digits);
  const Rat step = Rat(1) / pow(Rat(10), digits);
  const Rat lo = negative ? Rat(-d - step) : d, hi = negative ? Rat(-d) : Rat(d + step);
  if (root.lo == root.hi) return lo <= root.lo && root.lo <= hi;
  // Refine until the interval falls on one side of [lo, hi] or inside it.
  Rat l = root.lo, h = root.hi;
  const UPoly p = divmod(a, gcd(a, a.derivative())).first;
  const int sh = sgn(p.eval(h));
  for (int iter = 0; iter < 400; ++iter) {
    if (lo <= l && h <= hi) return true;
    if (h < lo || l > hi) return false;
    const Rat mid = (l + h) / 2;
    const int sm = sgn(p.eval(mid));
    if (sm == 0) return lo <= mid && mid <= hi;
    if (sm == sh)
      h = mid;
    else
      l = mid;
  }
  return false;
}

}  // namespace confdesign
