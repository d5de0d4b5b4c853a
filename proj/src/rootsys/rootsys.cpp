#include "confdesign/rootsys/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace confdesign {

Rat dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

RVec unit(int dim, int i, const Rat& s = Rat(1)) {
  RVec v(dim, Rat(0));
  v[i] = s;
  return v;
}

RVec add(RVec a, const RVec& b, const Rat& s = Rat(1)) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

void push_pm_pairs(std::vector<RVec>& out, int dim, int count) {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(add(unit(dim, i, Rat(si)), unit(dim, j, Rat(sj))));
}

std::vector<RVec> e8_roots() {
  std::vector<RVec> r;
  push_pm_pairs(r, 8, 8);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    RVec v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? Rat(-1, 2) : Rat(1, 2);
    r.push_back(v);
  }
  return r;
}

std::vector<RVec> orthogonal_to(const std::vector<RVec>& roots, const std::vector<RVec>& ws) {
  std::vector<RVec> out;
  for (const auto& a : roots)
    if (std::all_of(ws.begin(), ws.end(), [&](const RVec& w) { return sgn(dot(a, w)) == 0; })) out.push_back(a);
  return out;
}

}  // namespace

std::string RootSystem::name() const {
  if (type == "T") return "T" + std::to_string(rank);
  return type + std::to_string(rank);
}

bool RootSystem::simply_laced() const {
  std::set<Rat> norms;
  for (const auto& a : roots) norms.insert(dot(a, a));
  return norms.size() <= 1;
}

RootSystem build_roots(const std::string& type, int n) {
  RootSystem phi;
  phi.type = type;
  phi.rank = n;
  auto bad = [&] { throw std::domain_error("invalid rank for type " + type + ": " + std::to_string(n)); };
  if (type == "A") {
    if (n < 1) bad();
    phi.ambient = n + 1;
    phi.coxeter = n + 1;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (i != j) phi.roots.push_back(add(unit(n + 1, i), unit(n + 1, j), Rat(-1)));
  } else if (type == "B" || type == "C" || type == "D") {
    if (n < 2) bad();
    phi.ambient = n;
    phi.coxeter = type == "D" ? 2 * n - 2 : 2 * n;
    push_pm_pairs(phi.roots, n, n);
    if (type != "D")
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) phi.roots.push_back(unit(n, i, Rat(type == "B" ? s : 2 * s)));
  } else if (type == "E") {
    if (n < 6 || n > 8) bad();
    phi.ambient = 8;
    phi.coxeter = n == 6 ? 12 : n == 7 ? 18 : 30;
    const RVec w7 = add(unit(8, 6), unit(8, 7));
    const RVec w6 = add(unit(8, 5), unit(8, 6), Rat(-1));
    std::vector<RVec> ws;
    if (n <= 7) ws.push_back(w7);
    if (n == 6) ws.push_back(w6);
    phi.roots = orthogonal_to(e8_roots(), ws);
  } else if (type == "F") {
    if (n != 4) bad();
    phi.ambient = 4;
    phi.coxeter = 12;
    push_pm_pairs(phi.roots, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int s : {1, -1}) phi.roots.push_back(unit(4, i, Rat(s)));
    for (int mask = 0; mask < 16; ++mask) {
      RVec v(4);
      for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? Rat(-1, 2) : Rat(1, 2);
      phi.roots.push_back(v);
    }
  } else if (type == "G") {
    if (n != 2) bad();
    phi.ambient = 3;
    phi.coxeter = 6;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        phi.roots.push_back(add(unit(3, i), unit(3, j), Rat(-1)));
        const int k = 3 - i - j;
        if (i < j) {
          // 2e_k - e_i - e_j and its negative
          RVec v = add(add(unit(3, k, Rat(2)), unit(3, i), Rat(-1)), unit(3, j), Rat(-1));
          phi.roots.push_back(v);
          phi.roots.push_back(add(RVec(3, Rat(0)), v, Rat(-1)));
        }
      }
  } else if (type == "T") {
    if (n < 1) bad();
    phi.ambient = n;
  } else {
    throw std::domain_error("unknown root system type " + type);
  }
  std::sort(phi.roots.begin(), phi.roots.end());
  return phi;
}

RootSystem direct_sum(const std::vector<RootSystem>& parts) {
  RootSystem out;
  out.type = "sum";
  for (const auto& p : parts) {
    out.rank += p.rank;
    out.ambient += p.ambient;
  }
  int offset = 0;
  for (const auto& p : parts) {
    for (const auto& a : p.roots) {
      RVec v(out.ambient, Rat(0));
      std::copy(a.begin(), a.end(), v.begin() + offset);
      out.roots.push_back(v);
    }
    offset += p.ambient;
  }
  return out;
}

RVec default_y(const RootSystem& phi) {
  if (phi.type == "B" || phi.type == "C" || phi.type == "F" || phi.type == "D")
    return add(unit(phi.ambient, 0), unit(phi.ambient, 1));
  if (phi.type == "A" || phi.type == "G") return add(unit(phi.ambient, 0), unit(phi.ambient, 1), Rat(-1));
  if (phi.roots.empty()) throw std::domain_error("no roots to choose y from");
  return phi.roots.front();
}

Rat HarmonicPoly::eval(const RVec& x) const {
  if (static_cast<int>(x.size()) != nvars) throw std::invalid_argument("dimension mismatch");
  Rat s = 0;
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (int i = 0; i < nvars && sgn(t) != 0; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

HarmonicPoly HarmonicPoly::laplacian() const {
  HarmonicPoly out{nvars, {}};
  for (const auto& [e, c] : terms)
    for (int i = 0; i < nvars; ++i) {
      if (e[i] < 2) continue;
      auto f = e;
      f[i] -= 2;
      out.terms[f] += c * e[i] * (e[i] - 1);
    }
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

HarmonicPoly HarmonicPoly::transformed(const std::vector<int>& perm, const std::vector<int>& signs) const {
  // x_i -> s_i x_{perm[i]} maps the monomial prod x_i^{e_i} to prod s_i^{e_i} x_{perm[i]}^{e_i}.
  HarmonicPoly out{nvars, {}};
  for (const auto& [e, c] : terms) {
    std::vector<int> f(nvars, 0);
    Rat s = c;
    for (int i = 0; i < nvars; ++i) {
      f[perm[i]] += e[i];
      if (signs[i] < 0 && e[i] % 2) s = -s;
    }
    out.terms[f] += s;
  }
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

HarmonicPoly HarmonicPoly::monomial(const std::vector<int>& exps, const Rat& coeff) {
  HarmonicPoly p{static_cast<int>(exps.size()), {}};
  if (sgn(coeff) != 0) p.terms[exps] = coeff;
  return p;
}

HarmonicPoly operator+(const HarmonicPoly& a, const HarmonicPoly& b) {
  HarmonicPoly out = a;
  for (const auto& [e, c] : b.terms) out.terms[e] += c;
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

HarmonicPoly operator*(const HarmonicPoly& a, const HarmonicPoly& b) {
  HarmonicPoly out{a.nvars, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.terms[e] += ca * cb;
    }
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

HarmonicPoly HarmonicPoly::scaled(const Rat& s) const {
  HarmonicPoly out{nvars, {}};
  if (sgn(s) == 0) return out;
  for (const auto& [e, c] : terms) out.terms[e] = c * s;
  return out;
}

std::vector<RatFunc> gegenbauer_coefficients(int l) {
  if (l == 4) return {RatFunc(1), parse_ratfunc("-6/(4+n)"), parse_ratfunc("3/(8+6*n+n^2)")};
  if (l == 6)
    return {RatFunc(1), parse_ratfunc("-15/(8+n)"), parse_ratfunc("45/(48+14*n+n^2)"),
            parse_ratfunc("-15/(192+104*n+18*n^2+n^3)")};
  throw std::domain_error("only l = 4 and l = 6 are available");
}

std::vector<Rat> zonal_coefficients(int s, const Rat& n) {
  if (s < 0) throw std::domain_error("degree must be nonnegative");
  // From Delta(t^p A^k) with t = (x,y), A = |x|^2.
  std::vector<Rat> c{Rat(1)};
  for (int k = 0; 2 * (k + 1) <= s; ++k) {
    const Rat den = 2 * (k + 1) * (2 * s - 2 * k + n - 4);
    if (sgn(den) == 0) throw std::domain_error("zonal recurrence degenerates");
    c.push_back(-c[k] * (s - 2 * k) * (s - 2 * k - 1) / den);
  }
  return c;
}

namespace {

std::vector<Rat> coefficients_at(int l, int n) {
  std::vector<Rat> out;
  for (const auto& c : gegenbauer_coefficients(l)) out.push_back(c.subs(Var::n, Rat(n)).constant_value());
  return out;
}

HarmonicPoly power(const HarmonicPoly& p, int k) {
  std::vector<int> zero(p.nvars, 0);
  HarmonicPoly r = HarmonicPoly::monomial(zero);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

}  // namespace

HarmonicPoly gegenbauer_R(int l, int n, const RVec& y) {
  if (n < 1) throw std::domain_error("n must be positive");
  const int dim = static_cast<int>(y.size());
  if (std::all_of(y.begin(), y.end(), [](const Rat& v) { return sgn(v) == 0; }))
    throw std::domain_error("y must be nonzero");
  const auto c = coefficients_at(l, n);
  HarmonicPoly xy{dim, {}}, xx{dim, {}};
  for (int i = 0; i < dim; ++i) {
    std::vector<int> e(dim, 0);
    e[i] = 1;
    xy = xy + HarmonicPoly::monomial(e, y[i]);
    e[i] = 2;
    xx = xx + HarmonicPoly::monomial(e);
  }
  const Rat yy = dot(y, y);
  HarmonicPoly out{dim, {}};
  for (int k = 0; 2 * k <= l; ++k) {
    Rat s = c[k];
    for (int i = 0; i < k; ++i) s *= yy;
    out = out + (power(xy, l - 2 * k) * power(xx, k)).scaled(s);
  }
  if (dim == n && !out.laplacian().is_zero()) throw std::logic_error("R_l is not harmonic");
  return out;
}

Rat zonal_eval(int l, int n, const RVec& y, const RVec& x) {
  const auto c = coefficients_at(l, n);
  const Rat t = dot(x, y), ab = dot(x, x) * dot(y, y);
  Rat s = 0, abp = 1;
  for (int k = 0; 2 * k <= l; ++k) {
    Rat tt = 1;
    for (int i = 0; i < l - 2 * k; ++i) tt *= t;
    s += c[k] * tt * abp;
    abp *= ab;
  }
  return s;
}

Rat root_sum(const HarmonicPoly& p, const RootSystem& phi) {
  if (p.nvars != phi.ambient) throw std::invalid_argument("polynomial and root system dimensions differ");
  Rat s = 0;
  for (const auto& a : phi.roots) s += p.eval(a);
  return s;
}

Rat root_sum_R(int l, const RootSystem& phi) {
  const RVec y = default_y(phi);
  Rat s = 0;
  for (const auto& a : phi.roots) s += zonal_eval(l, phi.rank, y, a);
  return s;
}

RootProfile rootcount_profile(const RootSystem& phi, const RVec& y) {
  if (phi.roots.empty() || !phi.simply_laced() || dot(phi.roots.front(), phi.roots.front()) != 2)
    throw std::domain_error("rootcount_profile needs a simply-laced system of norm 2");
  std::map<Rat, long> counts;
  for (const auto& a : phi.roots) counts[dot(a, y)]++;
  RootProfile p{counts[0], counts[1], counts[2]};
  const long total = static_cast<long>(phi.roots.size());
  const bool ok = p.n2 == 1 && counts[-1] == p.n1 && counts[-2] == p.n2 && p.n0 + 2 * p.n1 + 2 * p.n2 == total &&
                  total == static_cast<long>(phi.rank) * phi.coxeter && p.n1 == 2 * phi.coxeter - 4 &&
                  counts.size() <= 5;
  if (!ok) throw std::logic_error("root count identities fail for " + phi.name());
  return p;
}

namespace {

struct RootClass {
  RatFunc count;
  int t2;    // (alpha, y)^2
  int norm;  // (alpha, alpha)
};

std::vector<RootClass> family_classes(Family f) {
  const RatFunc n = RatFunc::var(Var::n);
  const RatFunc h = RatFunc::var(Var::h);
  auto d_like = [&](int norm) {
    return std::vector<RootClass>{{RatFunc(2), 4, norm},
                                  {8 * (n - 2), 1, norm},
                                  {2 * n * (n - 1) - 2 - 8 * (n - 2), 0, norm}};
  };
  switch (f) {
    case Family::simply_laced:
      return {{RatFunc(2), 4, 2}, {2 * (2 * h - 4), 1, 2}, {n * h - 2 - 2 * (2 * h - 4), 0, 2}};
    case Family::A:
      return {{RatFunc(2), 4, 2}, {4 * (n - 1), 1, 2}, {n * (n + 1) - 2 - 4 * (n - 1), 0, 2}};
    case Family::D:
      return d_like(2);
    case Family::B: {
      auto cl = d_like(2);
      cl.push_back({RatFunc(4), 1, 1});
      cl.push_back({2 * n - 4, 0, 1});
      return cl;
    }
    case Family::C: {
      auto cl = d_like(2);
      cl.push_back({RatFunc(4), 4, 4});
      cl.push_back({2 * n - 4, 0, 4});
      return cl;
    }
  }
  throw std::domain_error("unknown family");
}

const char* family_type(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    default: throw std::domain_error("the simply-laced family has no single type");
  }
}

}  // namespace

RatFunc family_sum(int l, Family f) {
  const auto c = gegenbauer_coefficients(l);
  const int yy = 2;  // |y|^2 for every default y
  RatFunc total;
  for (const auto& cl : family_classes(f)) {
    RatFunc term;
    for (int k = 0; 2 * k <= l; ++k) {
      const int tpow = (l - 2 * k) / 2;
      Int tt;
      mpz_ui_pow_ui(tt.get_mpz_t(), cl.t2, tpow);
      Int ab;
      mpz_ui_pow_ui(ab.get_mpz_t(), cl.norm * yy, k);
      term += c[k] * RatFunc(Rat(tt * ab));
    }
    total += cl.count * term;
  }
  return total;
}

RatFunc closed_form(int l, Family f) {
  const RatFunc sl4 = parse_ratfunc("4*(h*(n-10)+6*(n+2))/(n+2)");
  const RatFunc sl6 = parse_ratfunc("4*(30*(n^2-16)+h*(n^2-48*n+272))/(n^2+12*n+32)");
  const RatFunc n = RatFunc::var(Var::n);
  switch (f) {
    case Family::simply_laced:
      if (l == 4) return sl4;
      if (l == 6) return sl6;
      break;
    case Family::A:
      if (l == 4) return parse_ratfunc("4*(n^2-3*n+2)/(n+2)");
      if (l == 6) return sl6.subs(Var::h, n + 1);
      break;
    case Family::D:
      if (l == 4) return parse_ratfunc("8*(n-4)^2/(n+2)");
      if (l == 6) return sl6.subs(Var::h, 2 * n - 2);
      break;
    case Family::B:
      if (l == 4) return parse_ratfunc("(8*n^2-60*n+112)/(n+2)");
      break;
    case Family::C:
      if (l == 4) return parse_ratfunc("8*(n^2-16)/(n+2)");
      break;
  }
  throw std::domain_error("no closed form for this family and degree");
}

Rat closed_form_sum(int l, Family f, int n) {
  const RootSystem phi = build_roots(family_type(f), n);
  RatFunc form;
  try {
    form = closed_form(l, f);
  } catch (const std::domain_error&) {
    form = family_sum(l, f);
  }
  const Rat value = form.subs(Var::n, Rat(n)).constant_value();
  if (value != root_sum_R(l, phi)) throw std::logic_error("closed form disagrees with the root sum for " + phi.name());
  return value;
}

HurleySum hurley_sum(const std::vector<RootSystem>& components) {
  if (components.size() < 2) throw std::domain_error("need at least two components");
  auto first = std::find_if(components.begin(), components.end(), [](const RootSystem& r) { return !r.roots.empty(); });
  if (first == components.end()) throw std::domain_error("all components are abelian");
  const std::size_t i1 = first - components.begin();
  const std::size_t i2 = i1 == 0 ? 1 : 0;
  const RootSystem sum = direct_sum(components);
  // h^i spans a line in component i: a root direction, or a coordinate axis if abelian.
  auto cartan_vector = [&](std::size_t idx) {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < idx; ++k) offset += components[k].ambient;
    RVec v(sum.ambient, Rat(0));
    const auto& comp = components[idx];
    if (comp.roots.empty())
      v[offset] = 1;
    else
      std::copy(comp.roots.front().begin(), comp.roots.front().end(), v.begin() + offset);
    return v;
  };
  const RVec h1 = cartan_vector(i1), h2 = cartan_vector(i2);
  const Rat n1 = dot(h1, h1), n2 = dot(h2, h2);
  // Q is even in each argument, so alpha(h)^2 = (alpha, h)^2 / |h|^2 keeps everything rational.
  HurleySum out;
  for (const auto& a : sum.roots) {
    const Rat u = dot(a, h1) * dot(a, h1) / n1, v = dot(a, h2) * dot(a, h2) / n2;
    out.total += u * u - 6 * u * v + v * v;
    out.first += u * u;
    out.second += v * v;
  }
  if (out.total != out.first + out.second) throw std::logic_error("quartic sums do not split over components");
  return out;
}

}  // namespace confdesign
