#include "confdesign/virasoro/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace confdesign {

namespace {

MPoly as_poly(const RatFunc& x) {
  if (!x.is_polynomial()) throw std::domain_error("charge must be polynomial: " + x.to_string());
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

// ------------------------------------------------------------ TensorVector

int TensorVector::degree() const {
  int d = -1;
  for (const auto& [k, c] : coeffs) {
    const int kd = k.first.degree() + k.second.degree();
    if (d >= 0 && kd != d) throw std::domain_error("tensor vector is not homogeneous");
    d = kd;
  }
  return d;
}

void TensorVector::add(const TensorKey& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [k, c] : o.coeffs) add(k, c);
  return *this;
}

TensorVector TensorVector::operator*(const RatFunc& s) const {
  TensorVector r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : coeffs) r.coeffs.emplace(k, c * s);
  return r;
}

TensorVector TensorVector::subs(Var v, const Rat& value) const {
  TensorVector r;
  for (const auto& [k, c] : coeffs) r.add(k, c.subs(v, value));
  return r;
}

RatFunc TensorVector::coeff(const Partition& pa, const Partition& pb) const {
  auto it = coeffs.find({pa, pb});
  return it == coeffs.end() ? RatFunc(0) : it->second;
}

std::string TensorVector::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : coeffs) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*a[" + k.first.to_string() + "]b[" + k.second.to_string() + "]";
  }
  return s;
}

// --------------------------------------------------------------- quotient

SlotQuotient make_quotient(const VermaAction& action, const VermaVector& singular, int max_degree) {
  SlotQuotient q;
  q.singular = singular;
  q.max_degree = max_degree;
  q.singular_degree = singular.coeffs.begin()->first.degree();
  for (int k = q.singular_degree; k <= max_degree; ++k) {
    // Spanning set L_{-lambda} s of the submodule in degree k.
    std::vector<std::map<Partition, MPoly>> span;
    for (const auto& lambda : partitions(k - q.singular_degree, 1)) {
      std::map<Partition, MPoly> cur;
      for (const auto& [p, c] : singular.coeffs) accumulate(cur, p, as_poly(c));
      for (auto it = lambda.parts.rbegin(); it != lambda.parts.rend(); ++it) {
        std::map<Partition, MPoly> next;
        for (const auto& [p, c] : cur)
          for (const auto& [r, t] : action.apply(-*it, p)) accumulate(next, r, c * t);
        cur = std::move(next);
      }
      span.push_back(std::move(cur));
    }
    auto cols = partitions(k, action.min_part());
    std::reverse(cols.begin(), cols.end());  // ascending lexicographic
    RMatrix m(span.size(), cols.size());
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        auto it = span[i].find(cols[j]);
        if (it != span[i].end()) m(i, j) = RatFunc(it->second);
      }
    const auto pivots = row_reduce(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::vector<std::pair<Partition, MPoly>> repl;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j == pivots[r] || m(r, j).is_zero()) continue;
        repl.emplace_back(cols[j], -as_poly(m(r, j)));
      }
      q.rewrite.emplace(cols[pivots[r]], std::move(repl));
    }
  }
  return q;
}

// ----------------------------------------------------------- TensorModule

TensorModule::TensorModule(RatFunc charge_a, RatFunc charge_b, std::optional<SlotQuotient> quotient_a)
    : charge_a_(std::move(charge_a)),
      charge_b_(std::move(charge_b)),
      action_a_(std::make_shared<VermaAction>(as_poly(charge_a_), MPoly(), 2)),
      action_b_(std::make_shared<VermaAction>(as_poly(charge_b_), MPoly(), 2)),
      quotient_a_(std::move(quotient_a)) {}

TensorModule TensorModule::vacuum_pair(const RatFunc& c, const RatFunc& e) { return TensorModule(e, c - e); }

TensorModule TensorModule::half_case(const RatFunc& c, int max_degree) {
  const RatFunc e(frac(1, 2));
  VermaAction action(MPoly(frac(1, 2)), MPoly(), 2);
  auto sing = singular_vectors(action, 6);
  if (sing.size() != 1) throw std::logic_error("expected one singular vector of degree 6 at charge 1/2");
  return TensorModule(e, c - e, make_quotient(action, sing.front(), max_degree));
}

std::vector<Partition> TensorModule::slot_basis(Slot s, int k) const {
  auto all = partitions(k, 2);
  if (s == Slot::b || !quotient_a_ || k < quotient_a_->singular_degree) return all;
  if (k > quotient_a_->max_degree) throw std::domain_error("degree beyond the quotient's range");
  std::vector<Partition> out;
  for (auto& p : all)
    if (!quotient_a_->is_pivot(p)) out.push_back(std::move(p));
  return out;
}

std::vector<TensorKey> TensorModule::basis(int n) const {
  std::vector<TensorKey> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& pa : slot_basis(Slot::a, k))
      for (const auto& pb : slot_basis(Slot::b, n - k)) out.emplace_back(pa, pb);
  return out;
}

PTerms TensorModule::slot_apply(Slot s, int n, const Partition& p) const {
  const PTerms& raw = action(s).apply(n, p);
  if (s == Slot::b || !quotient_a_) return raw;
  const int deg = p.degree() - n;
  if (deg < quotient_a_->singular_degree) return raw;
  if (deg > quotient_a_->max_degree) throw std::domain_error("degree beyond the quotient's range");
  std::map<Partition, MPoly> acc;
  for (const auto& [q, c] : raw) {
    auto it = quotient_a_->rewrite.find(q);
    if (it == quotient_a_->rewrite.end()) {
      accumulate(acc, q, c);
      continue;
    }
    for (const auto& [r, k] : it->second) accumulate(acc, r, c * k);
  }
  return PTerms(acc.begin(), acc.end());
}

TensorVector TensorModule::lmode_apply(int n, const TensorVector& v, Slot s) const {
  TensorVector out;
  for (const auto& [key, c] : v.coeffs) {
    const Partition& p = s == Slot::a ? key.first : key.second;
    for (const auto& [q, k] : slot_apply(s, n, p)) {
      TensorKey nk = s == Slot::a ? TensorKey{q, key.second} : TensorKey{key.first, q};
      out.add(nk, c * RatFunc(k));
    }
  }
  return out;
}

TensorVector TensorModule::lmode_total(int n, const TensorVector& v) const {
  return lmode_apply(n, v, Slot::a) + lmode_apply(n, v, Slot::b);
}

TensorVector TensorModule::reduce(const TensorVector& v) const {
  if (!quotient_a_) return v;
  TensorVector out;
  for (const auto& [key, c] : v.coeffs) {
    auto it = quotient_a_->rewrite.find(key.first);
    if (it == quotient_a_->rewrite.end()) {
      out.add(key, c);
      continue;
    }
    for (const auto& [r, k] : it->second) out.add({r, key.second}, c * RatFunc(k));
  }
  return out;
}

// --------------------------------------------------------------- hw_solve

const std::vector<Rat>& degenerate_charges() {
  static const std::vector<Rat> list{Rat(0), frac(-22, 5), frac(-68, 7), frac(1, 2), frac(-46, 3), frac(-3, 5)};
  return list;
}

namespace {

using Form = std::vector<RatFunc>;  // linear form in the pure-b parameters

bool is_zero_form(const Form& f) {
  return std::all_of(f.begin(), f.end(), [](const RatFunc& x) { return x.is_zero(); });
}

void axpy(Form& y, const RatFunc& a, const Form& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

void check_charge(const RatFunc& charge, const char* name, bool has_quotient) {
  if (!charge.is_constant()) return;
  const Rat x = charge.constant_value();
  for (const auto& bad : degenerate_charges()) {
    if (x != bad) continue;
    if (has_quotient && x == frac(1, 2)) return;
    throw std::domain_error(std::string("degenerate charge ") + name + " = " + to_string(x));
  }
}

// Sort key for the normalization: more parts first, then ascending lex.
bool normalization_before(const Partition& x, const Partition& y) {
  if (x.length() != y.length()) return x.length() > y.length();
  return x < y;
}

}  // namespace

std::vector<TensorVector> hw_solve(const TensorModule& module, int n) {
  if (n < 0) throw std::domain_error("negative degree");
  check_charge(module.charge(Slot::a), "e", module.quotient().has_value());
  check_charge(module.charge(Slot::b), "c - e", false);

  std::vector<std::vector<Partition>> A(n + 1), B(n + 1);
  std::vector<std::map<Partition, std::size_t>> a_index(n + 1), b_index(n + 1);
  for (int k = 0; k <= n; ++k) {
    A[k] = module.slot_basis(Slot::a, k);
    B[k] = module.slot_basis(Slot::b, k);
    for (std::size_t i = 0; i < A[k].size(); ++i) a_index[k][A[k][i]] = i;
    for (std::size_t i = 0; i < B[k].size(); ++i) b_index[k][B[k][i]] = i;
  }
  const std::size_t P = B[n].size();
  const Form zero_form(P, RatFunc(0));

  // X[k][alpha][beta]: coefficient of a_alpha (x) b_beta in the a-degree k
  // component, as a linear form in the pure-b coefficients.
  std::vector<std::vector<std::vector<Form>>> X(n + 1);
  X[0].assign(1, std::vector<Form>(P, zero_form));
  for (std::size_t j = 0; j < P; ++j) X[0][0][j][j] = RatFunc(1);
  std::vector<Form> constraints;

  for (int k = 1; k <= n; ++k) {
    const int bdeg = n - k;
    X[k].assign(A[k].size(), std::vector<Form>(B[bdeg].size(), zero_form));
    if (B[bdeg].empty()) continue;
    // Equations a_1 v_k = -b_1 v_{k-1} and a_2 v_k = -b_2 v_{k-2}.
    const std::size_t r1 = A[k - 1].size();
    const std::size_t r2 = k >= 2 ? A[k - 2].size() : 0;
    const std::size_t rows = r1 + r2;
    std::vector<std::vector<Form>> rhs(rows, std::vector<Form>(B[bdeg].size(), zero_form));
    for (int j : {1, 2}) {
      const int src = k - j;
      if (src < 0) continue;
      const std::size_t offset = j == 1 ? 0 : r1;
      for (std::size_t al = 0; al < A[src].size(); ++al)
        for (std::size_t bp = 0; bp < B[bdeg + j].size(); ++bp) {
          const Form& f = X[src][al][bp];
          if (is_zero_form(f)) continue;
          for (const auto& [q, c] : module.slot_apply(Slot::b, j, B[bdeg + j][bp]))
            axpy(rhs[offset + al][b_index[bdeg].at(q)], -RatFunc(c), f);
        }
    }
    const std::size_t ncols = A[k].size();
    if (ncols == 0) {
      for (auto& row : rhs)
        for (auto& f : row)
          if (!is_zero_form(f)) constraints.push_back(std::move(f));
      continue;
    }
    RMatrix aug(rows, ncols + rows);
    for (std::size_t col = 0; col < ncols; ++col)
      for (int j : {1, 2}) {
        if (k - j < 0) continue;
        const std::size_t offset = j == 1 ? 0 : r1;
        for (const auto& [q, c] : module.slot_apply(Slot::a, j, A[k][col]))
          aug(offset + a_index[k - j].at(q), col) += RatFunc(c);
      }
    for (std::size_t r = 0; r < rows; ++r) aug(r, ncols + r) = RatFunc(1);
    const auto pivots = row_reduce(aug);
    std::size_t rank = 0;
    while (rank < pivots.size() && pivots[rank] < ncols) ++rank;
    if (rank < ncols)
      throw std::domain_error("degenerate charge e = " + module.charge(Slot::a).to_string() +
                              ": L_1, L_2 not injective on slot a in degree " + std::to_string(k));
    for (std::size_t beta = 0; beta < B[bdeg].size(); ++beta) {
      for (std::size_t r = 0; r < rows; ++r) {
        Form y = zero_form;
        for (std::size_t t = 0; t < rows; ++t) axpy(y, aug(r, ncols + t), rhs[t][beta]);
        if (r < rank) X[k][r][beta] = std::move(y);
        else if (!is_zero_form(y)) constraints.push_back(std::move(y));
      }
    }
  }

  // Parameter columns in reverse normalization order, so the preferred
  // monomials end up as free variables of the reduced constraint system.
  std::vector<std::size_t> order(P);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return normalization_before(B[n][y], B[n][x]); });
  RMatrix cm(constraints.size(), P);
  for (std::size_t r = 0; r < constraints.size(); ++r)
    for (std::size_t j = 0; j < P; ++j) cm(r, j) = constraints[r][order[j]];
  std::vector<std::vector<RatFunc>> sols;
  if (constraints.empty()) {
    for (std::size_t j = P; j-- > 0;) {
      std::vector<RatFunc> z(P, RatFunc(0));
      z[j] = RatFunc(1);
      sols.push_back(std::move(z));
    }
  } else {
    sols = kernel(cm);
    std::reverse(sols.begin(), sols.end());
  }

  std::vector<TensorVector> out;
  for (const auto& zs : sols) {
    Form z(P);
    for (std::size_t j = 0; j < P; ++j) z[order[j]] = zs[j];
    TensorVector v;
    for (int k = 0; k <= n; ++k)
      for (std::size_t al = 0; al < A[k].size(); ++al)
        for (std::size_t be = 0; be < B[n - k].size(); ++be) {
          const Form& f = X[k][al][be];
          RatFunc s;
          for (std::size_t j = 0; j < P; ++j)
            if (!f[j].is_zero() && !z[j].is_zero()) s += f[j] * z[j];
          v.add({A[k][al], B[n - k][be]}, s);
        }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<TensorVector> hw_solve(int n, const RatFunc& c, const RatFunc& e, bool half_case_a) {
  if (half_case_a) {
    if (e != RatFunc(frac(1, 2))) throw std::domain_error("the half case needs e = 1/2");
    return hw_solve(TensorModule::half_case(c, std::max(n, 8)), n);
  }
  return hw_solve(TensorModule::vacuum_pair(c, e), n);
}

}  // namespace confdesign
