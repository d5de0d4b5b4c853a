#include "confdesign/virasoro/verma.hpp"

#include <stdexcept>

namespace confdesign {

namespace {

MPoly as_poly(const RatFunc& x, const char* what) {
  if (!x.is_polynomial()) throw std::domain_error(std::string(what) + " must be polynomial: " + x.to_string());
  return x.num() * (Rat(1) / x.den().constant_value());
}

void accumulate(std::map<Partition, MPoly>& acc, const Partition& p, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

VermaAction::VermaAction(MPoly charge, MPoly weight, int min_part)
    : charge_(std::move(charge)), weight_(std::move(weight)), min_part_(min_part) {
  if (min_part != 1 && min_part != 2) throw std::invalid_argument("min_part must be 1 or 2");
}

const PTerms& VermaAction::apply(int n, const Partition& p) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(n, p.parts);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  PTerms result = compute(n, p);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

// L_n L_{-m1} L_{-rest} v with the bracket
// [L_n, L_{-m}] = (n+m) L_{n-m} + delta_{n,m} (n^3-n)/12 C.
PTerms VermaAction::compute(int n, const Partition& p) const {
  if (p.empty()) {
    if (n > 0) return {};
    if (n == 0) return weight_.is_zero() ? PTerms{} : PTerms{{p, weight_}};
    if (-n >= min_part_) return {{Partition{{-n}}, MPoly(1)}};
    return {};
  }
  const int m1 = p.parts.front();
  if (-n >= m1) {
    Partition q = p;
    q.parts.insert(q.parts.begin(), -n);
    return {{q, MPoly(1)}};
  }
  const Partition rest{std::vector<int>(p.parts.begin() + 1, p.parts.end())};
  std::map<Partition, MPoly> acc;
  for (const auto& [q, coef] : apply(n, rest))
    for (const auto& [r, coef2] : apply(-m1, q)) accumulate(acc, r, coef * coef2);
  if (n + m1 != 0)
    for (const auto& [q, coef] : apply(n - m1, rest)) accumulate(acc, q, coef * Rat(n + m1));
  if (n == m1) accumulate(acc, rest, charge_ * frac(static_cast<long>(n) * n * n - n, 12));
  return PTerms(acc.begin(), acc.end());
}

std::string VermaVector::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : coeffs) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*L[" + p.to_string() + "]";
  }
  return s;
}

VermaVector lmode_apply(int n, const VermaVector& v, const RatFunc& charge) {
  VermaAction action(as_poly(charge, "charge"), as_poly(v.weight, "weight"), v.min_part);
  VermaVector out{v.weight, v.min_part, {}};
  for (const auto& [p, c] : v.coeffs)
    for (const auto& [q, k] : action.apply(n, p)) {
      auto [it, inserted] = out.coeffs.try_emplace(q, c * RatFunc(k));
      if (!inserted) {
        it->second += c * RatFunc(k);
        if (it->second.is_zero()) out.coeffs.erase(it);
      }
    }
  return out;
}

RMatrix gram_matrix(int n, int min_part, const RatFunc& charge, const RatFunc& weight) {
  VermaAction action(as_poly(charge, "charge"), as_poly(weight, "weight"), min_part);
  const auto basis = partitions(n, min_part);
  RMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      // <L_{-mu} v, L_{-nu} v> = coefficient of v in L_{mu_k} ... L_{mu_1} L_{-nu} v
      std::map<Partition, MPoly> cur{{basis[j], MPoly(1)}};
      for (int part : basis[i].parts) {
        std::map<Partition, MPoly> next;
        for (const auto& [q, c] : cur)
          for (const auto& [r, k] : action.apply(part, q)) accumulate(next, r, c * k);
        cur = std::move(next);
      }
      auto it = cur.find(Partition{});
      if (it != cur.end()) g(i, j) = RatFunc(it->second);
    }
  }
  return g;
}

FactoredPoly kac_det_vacuum(int n) {
  if (n < 0) throw std::domain_error("negative degree");
  const RMatrix g = gram_matrix(n, 2, RatFunc::var(Var::c), RatFunc(0));
  PMatrix p = g.map([](const RatFunc& x) { return x.num(); });
  const MPoly d = det(p);
  if (d.is_zero()) throw std::logic_error("vacuum Gram determinant vanishes identically");
  auto [content, factors] = factor(UPoly::from_mpoly(d, Var::c));
  return {content, factors};
}

Rat KacData::at_m(const Rat& m) const {
  const Rat num = pow((m + 1) * p - m * q, 2) - 1;
  const Rat den = 4 * m * (m + 1);
  if (den == 0) throw std::domain_error("h_{p,q} undefined at m = " + to_string(m));
  return num / den;
}

std::optional<std::pair<Rat, Rat>> KacData::at_c(const Rat& c) const {
  if (c == 1) throw std::domain_error("h_{p,q}(c) has a branch point at c = 1");
  Rat root;
  if (!rational_sqrt((25 - c) / (1 - c), root)) return std::nullopt;
  const Rat plus = frac(-1, 2) + root / 2;
  const Rat minus = frac(-1, 2) - root / 2;
  return std::make_pair(at_m(plus), at_m(minus));
}

KacData hpq(int p, int q) {
  if (p < 1 || q < 1) throw std::domain_error("h_{p,q} needs p, q >= 1");
  return KacData{p, q};
}

std::vector<VermaVector> singular_vectors(const VermaAction& action, int degree) {
  const auto cols = partitions(degree, action.min_part());
  std::vector<Partition> rows;
  std::map<Partition, std::size_t> row_index;
  for (int j : {1, 2})
    for (const auto& p : partitions(degree - j, action.min_part())) {
      row_index.emplace(p, rows.size());
      rows.push_back(p);
    }
  // Rows for degree-1 and degree-2 targets are disjoint since degrees differ.
  RMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int j : {1, 2})
      for (const auto& [q, k] : action.apply(j, cols[c])) m(row_index.at(q), c) += RatFunc(k);
  std::vector<VermaVector> out;
  for (const auto& vec : kernel(m)) {
    VermaVector v{RatFunc(action.weight()), action.min_part(), {}};
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!vec[c].is_zero()) v.coeffs.emplace(cols[c], vec[c]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace confdesign
