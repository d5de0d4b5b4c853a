#include "confdesign/qforms/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace confdesign {

namespace {

std::vector<Rat> mul_trunc(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t n) {
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// prod_{m >= from} (1 - q^m)^{sign}, n terms.
std::vector<Rat> euler_product(std::size_t n, int from, bool inverse) {
  std::vector<Rat> p(n, Rat(0));
  if (n == 0) return p;
  p[0] = 1;
  for (std::size_t m = from; m < n; ++m) {
    if (inverse)
      for (std::size_t i = m; i < n; ++i) p[i] += p[i - m];
    else
      for (std::size_t i = n - 1; i >= m; --i) p[i] -= p[i - m];
  }
  return p;
}

Int sigma(int k, long n) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      Int t;
      mpz_ui_pow_ui(t.get_mpz_t(), d, k);
      s += t;
    }
  return s;
}

}  // namespace

QSeries QSeries::one(std::size_t n) {
  std::vector<Rat> cs(n, Rat(0));
  if (n) cs[0] = 1;
  return {0, cs};
}

Rat QSeries::coeff48(int exp48) const {
  const int d = exp48 - lead48;
  if (d < 0) return 0;
  if (d % 48) throw std::invalid_argument("exponent off the series grid");
  const std::size_t i = d / 48;
  if (i >= coeffs.size()) throw std::out_of_range("coefficient beyond truncation");
  return coeffs[i];
}

QSeries QSeries::truncated(std::size_t n) const {
  if (n > coeffs.size()) throw std::out_of_range("cannot extend a truncated series");
  return {lead48, std::vector<Rat>(coeffs.begin(), coeffs.begin() + n)};
}

QSeries QSeries::scaled(const Rat& s) const {
  QSeries r = *this;
  for (auto& x : r.coeffs) x *= s;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if ((a.lead48 - b.lead48) % 48) throw std::invalid_argument("series on incompatible grids");
  const int lead = std::min(a.lead48, b.lead48);
  const long end = std::min<long>((a.lead48 - lead) / 48 + long(a.order()),
                                  (b.lead48 - lead) / 48 + long(b.order()));
  std::vector<Rat> cs(std::max<long>(end, 0), Rat(0));
  const std::size_t sa = (a.lead48 - lead) / 48, sb = (b.lead48 - lead) / 48;
  for (std::size_t i = 0; i < a.order() && sa + i < cs.size(); ++i) cs[sa + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.order() && sb + i < cs.size(); ++i) cs[sb + i] += b.coeffs[i];
  return {lead, cs};
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.scaled(Rat(-1)); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  return {a.lead48 + b.lead48, mul_trunc(a.coeffs, b.coeffs, n)};
}

QSeries QSeries::inverse() const {
  if (coeffs.empty() || sgn(coeffs[0]) == 0) throw std::domain_error("series has zero leading coefficient");
  const std::size_t n = coeffs.size();
  std::vector<Rat> r(n, Rat(0));
  const Rat inv0 = 1 / coeffs[0];
  r[0] = inv0;
  for (std::size_t i = 1; i < n; ++i) {
    Rat s = 0;
    for (std::size_t j = 1; j <= i; ++j) s += coeffs[j] * r[i - j];
    r[i] = -s * inv0;
  }
  return {-lead48, r};
}

QSeries QSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries result = one(order());
  QSeries base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QSeries QSeries::root(int k) const {
  if (k <= 0) throw std::invalid_argument("root index must be positive");
  if (coeffs.empty() || coeffs[0] != 1) throw std::domain_error("root needs leading coefficient 1");
  if (lead48 % k) throw std::domain_error("root leaves the exponent grid");
  const std::size_t n = order();
  const QSeries f{0, coeffs};
  // Newton: y <- y - (y^k - f) / (k y^{k-1}), doubling the precision.
  QSeries y = one(1);
  for (std::size_t prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    std::vector<Rat> ext = y.coeffs;
    ext.resize(prec, Rat(0));
    y = {0, ext};
    const QSeries fp = f.truncated(prec);
    const QSeries num = y.pow(k) - fp;
    const QSeries den = y.pow(k - 1).scaled(Rat(k));
    y = y - num / den;
  }
  y.lead48 = lead48 / k;
  return y;
}

bool QSeries::integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& x) { return x.get_den() == 1; });
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  os << "q^(" << Rat(lead48, 48) << ")*(";
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    if (!first) os << (sgn(coeffs[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs[i]) < 0) os << "-";
    first = false;
    os << abs(coeffs[i]);
    if (i) os << "*q^" << i;
  }
  if (first) os << "0";
  os << " + O(q^" << coeffs.size() << "))";
  return os.str();
}

QSeries qs_eta(std::size_t n) { return {2, euler_product(n, 1, false)}; }

QSeries qs_delta(std::size_t n) { return QSeries{0, euler_product(n, 1, false)}.pow(24).shifted(48); }

QSeries qs_e4(std::size_t n) {
  std::vector<Rat> cs(n, Rat(0));
  if (n) cs[0] = 1;
  for (std::size_t i = 1; i < n; ++i) cs[i] = Rat(240 * sigma(3, i));
  return {0, cs};
}

QSeries qs_e6(std::size_t n) {
  std::vector<Rat> cs(n, Rat(0));
  if (n) cs[0] = 1;
  for (std::size_t i = 1; i < n; ++i) cs[i] = Rat(-504 * sigma(5, i));
  return {0, cs};
}

QSeries qs_j(std::size_t n) { return qs_e4(n).pow(3) / qs_delta(n); }

QSeries qs_cbrt_j(std::size_t n) { return qs_j(n).shifted(48).root(3).shifted(-16); }

QSeries vacuum_character(const Rat& c, std::size_t n) {
  const Rat lead = -2 * c;
  if (lead.get_den() != 1) throw std::domain_error("c/24 is off the q^(1/48) grid");
  return {static_cast<int>(lead.get_num().get_si()), euler_product(n, 2, true)};
}

QSeries ising_vacuum_character(std::size_t n) {
  // (prod (1 + q^{m+1/2}) + prod (1 - q^{m+1/2})) / 2 in the variable q^{1/2}.
  const std::size_t m = 2 * n;
  std::vector<Rat> plus(m, Rat(0)), minus(m, Rat(0));
  plus[0] = minus[0] = 1;
  for (std::size_t odd = 1; odd < m; odd += 2)
    for (std::size_t i = m - 1; i >= odd; --i) {
      plus[i] += plus[i - odd];
      minus[i] -= minus[i - odd];
    }
  std::vector<Rat> cs(n);
  for (std::size_t i = 0; i < n; ++i) cs[i] = (plus[2 * i] + minus[2 * i]) / 2;
  return {-1, cs};
}

ExtremalChar extremal_character(int c, std::size_t n) {
  if (c <= 0 || c % 8) throw std::invalid_argument("c must be a positive multiple of 8");
  ExtremalChar x;
  x.c = c;
  x.k = c / 24;
  n = std::max<std::size_t>(n, x.k + 3);
  const QSeries cj = qs_cbrt_j(n);
  const QSeries vac = vacuum_character(Rat(c), n);
  std::vector<QSeries> gens;
  for (int i = 0; i <= x.k; ++i) gens.push_back(cj.pow((c - 24 * i) / 8));
  // gens[i] starts at relative order i with coefficient 1: triangular solve.
  x.series = QSeries{vac.lead48, std::vector<Rat>(n, Rat(0))};
  for (int i = 0; i <= x.k; ++i) {
    const Rat lam = vac.at(i) - x.series.at(i);
    if (gens[i].coeff48(vac.lead48 + 48 * i) != 1) throw std::logic_error("extremal matching system is singular");
    x.lambdas.push_back(lam);
    x.series = x.series + gens[i].scaled(lam);
  }
  const QSeries ratio = x.series / vac;
  for (int i = 0; i <= x.k; ++i)
    if (ratio.at(i) != (i == 0 ? 1 : 0)) throw std::logic_error("extremal character does not match the vacuum");
  x.A1 = ratio.at(x.k + 1);
  x.A2 = ratio.at(x.k + 2);
  return x;
}

int mform_dim(int weight) {
  if (weight < 0 || weight % 2) return 0;
  if (weight % 12 == 2) return weight / 12;
  return weight / 12 + 1;
}

ExtremalDesign extremal_design_strength(int c) {
  if (c <= 0 || c % 8) throw std::invalid_argument("c must be a positive multiple of 8");
  ExtremalDesign d;
  const int k = c / 24;
  d.minimal_weight = k + 1;
  auto vanishes = [&](int s) { return mform_dim(c / 2 + s - 12 * (k + 1)) == 0; };
  int s = 1;
  while (vanishes(s)) ++s;
  d.t = s - 1;
  for (s = d.t + 2; vanishes(s); ++s) d.extra.push_back(s);
  return d;
}

std::vector<std::map<int, Rat>> a1_refined_character(int n) {
  // theta(lambda) * sum p(m) q^m; the q^{-1/24} prefactor is dropped.
  const std::vector<Rat> p = euler_product(n + 1, 1, true);
  std::vector<std::map<int, Rat>> out(n + 1);
  for (int m = 0; m <= n; ++m) {
    out[m][0] += p[m];
    for (int k = 1; k * k <= m; ++k) {
      out[m][k] += p[m - k * k];
      out[m][-k] += p[m - k * k];
    }
  }
  return out;
}

std::vector<Rat> su2_decompose(const std::map<int, Rat>& weights) {
  std::map<int, Rat> w;
  for (const auto& [k, v] : weights)
    if (sgn(v) != 0) w[k] = v;
  for (const auto& [k, v] : w) {
    auto it = w.find(-k);
    if (it == w.end() || it->second != v) throw std::domain_error("weight multiset is not symmetric");
  }
  const int top = w.empty() ? 0 : w.rbegin()->first;
  std::vector<Rat> mult(top + 1, Rat(0));
  for (int i = top; i >= 0; --i) {
    const Rat m = w.count(i) ? w[i] : Rat(0);
    if (sgn(m) < 0) throw std::domain_error("negative multiplicity at highest weight " + std::to_string(i));
    mult[i] = m;
    if (sgn(m) == 0) continue;
    for (int k = -i; k <= i; ++k) w[k] -= m;
  }
  for (const auto& [k, v] : w)
    if (sgn(v) != 0) throw std::domain_error("weight multiset does not decompose");
  return mult;
}

A1Report a1_identity_check(int n) {
  A1Report r;
  const auto refined = a1_refined_character(n);
  const std::vector<Rat> vac = euler_product(n + 1, 2, true);
  for (int m = 0; m <= n; ++m) {
    r.expected.push_back(vac[m]);
    try {
      r.trivial.push_back(su2_decompose(refined[m]).at(0));
    } catch (const std::domain_error&) {
      r.trivial.push_back(Rat(-1));
    }
    if (r.ok && r.trivial.back() != r.expected.back()) {
      r.ok = false;
      r.failed_order = m;
    }
  }
  return r;
}

}  // namespace confdesign
