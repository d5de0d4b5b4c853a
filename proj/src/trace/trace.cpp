#include "confdesign/trace/trace.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace confdesign {

namespace {

using WordMap = std::map<Letters, Rat>;

// v_(n) for a monomial v = u^1_{-p_1} ... u^k_{-p_k} 1 of fields of a common
// weight, via the associativity relation
//   (u_(m) w)_(n) = sum_i (-1)^i C(m,i) [u_(m-i) w_(n+i) - (-1)^m w_(m+n-i) u_(i)].
// The result is only claimed on states of degree <= slack above the bottom
// of the module: terms whose operator w_(n+i) or u_(i) would push such a
// state below degree 0 vanish and are omitted, which keeps both sums finite.
class Expander {
 public:
  explicit Expander(int weight) : weight_(weight) {}

  const WordMap& modes(const Letters& vec, int n, int slack) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_tuple(vec, n, slack);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    WordMap out = compute(vec, n, slack);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  // Letter index of u_(k).
  int letter_index(int k) const { return k - weight_ + 1; }

  WordMap compute(const Letters& vec, int n, int slack) {
    WordMap out;
    if (vec.empty()) {
      if (n == -1) out.emplace(Letters{}, Rat(1));
      return out;
    }
    const Letter u = vec.front();
    const Letters w(vec.begin() + 1, vec.end());
    int deg_w = 0;
    for (const auto& l : w) deg_w -= l.index;
    const int m = u.index + weight_ - 1;
    auto add = [&](Letters word, const Rat& c) {
      if (c == 0) return;
      auto [pos, inserted] = out.try_emplace(std::move(word), c);
      if (!inserted) {
        pos->second += c;
        if (pos->second == 0) out.erase(pos);
      }
    };
    for (int i = 0; i <= slack + deg_w - n - 1; ++i) {
      const Rat coef = (i % 2 ? -1 : 1) * binomial(m, i);
      if (coef == 0) continue;
      for (const auto& [word, k] : modes(w, n + i, slack)) {
        Letters next;
        next.reserve(word.size() + 1);
        next.push_back({u.slot, letter_index(m - i)});
        next.insert(next.end(), word.begin(), word.end());
        add(std::move(next), coef * k);
      }
    }
    const int sign_m = (m % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= slack + weight_ - 1; ++i) {
      const Rat coef = -(i % 2 ? -1 : 1) * sign_m * binomial(m, i);
      if (coef == 0) continue;
      for (const auto& [word, k] : modes(w, m + n - i, slack + weight_ - 1 - i)) {
        Letters next = word;
        next.push_back({u.slot, letter_index(i)});
        add(std::move(next), coef * k);
      }
    }
    return out;
  }

  int weight_;
  std::recursive_mutex mu_;
  std::map<std::tuple<Letters, int, int>, WordMap> memo_;
};

Expander& virasoro_expander() {
  static Expander ex(2);
  return ex;
}

Letters monomial_letters(const TensorKey& key) {
  Letters out;
  for (int p : key.first.parts) out.push_back({Slot::a, -p});
  for (int p : key.second.parts) out.push_back({Slot::b, -p});
  return out;
}

// Polynomial in x = a_0 with coefficients in Q[c, e, h].
using XPoly = std::vector<MPoly>;

void add_scaled(XPoly& acc, const XPoly& p, const MPoly& s) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i] * s;
}

MPoly slot_charge(Slot s) {
  return s == Slot::a ? MPoly::var(Var::e) : MPoly::var(Var::c) - MPoly::var(Var::e);
}

class LowestReducer {
 public:
  // Trace contribution of a word on W_h, as a polynomial in a_0.
  const XPoly& reduce(const Letters& word) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
    XPoly r = compute(word);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return memo_.emplace(word, std::move(r)).first->second;
  }

 private:
  XPoly compute(const Letters& word) {
    int j = -1;
    for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k)
      if (word[k].index > 0) {
        j = k;
        break;
      }
    if (j >= 0) {
      // A positive mode acting first lowers the degree below W_h.
      if (j == static_cast<int>(word.size()) - 1) return {};
      const Letter p = word[j], q = word[j + 1];
      XPoly out;
      Letters swapped = word;
      std::swap(swapped[j], swapped[j + 1]);
      add_scaled(out, reduce(swapped), MPoly(1));
      if (p.slot == q.slot) {
        Letters merged(word.begin(), word.begin() + j);
        merged.push_back({p.slot, p.index + q.index});
        merged.insert(merged.end(), word.begin() + j + 2, word.end());
        add_scaled(out, reduce(merged), MPoly(p.index - q.index));
        if (p.index + q.index == 0) {
          Letters dropped(word.begin(), word.begin() + j);
          dropped.insert(dropped.end(), word.begin() + j + 2, word.end());
          const long pm = p.index;
          add_scaled(out, reduce(dropped), slot_charge(p.slot) * frac(pm * pm * pm - pm, 12));
        }
      }
      return out;
    }
    // All positive modes are gone. A remaining negative mode raises the
    // degree, so the word maps W_h into a higher graded piece and its
    // W_h -> W_h block, hence its trace, is zero.
    for (const auto& l : word)
      if (l.index < 0) return {};
    XPoly r{MPoly(1)};
    const MPoly h = MPoly::var(Var::h);
    for (const auto& l : word) {
      XPoly next(r.size() + 1);
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (l.slot == Slot::a) {
          next[i + 1] += r[i];
        } else {  // b_0 = h - a_0 on W_h
          next[i] += r[i] * h;
          next[i + 1] -= r[i];
        }
      }
      r = std::move(next);
    }
    return r;
  }

  std::recursive_mutex mu_;
  std::map<Letters, XPoly> memo_;
};

LowestReducer& lowest_reducer() {
  static LowestReducer r;
  return r;
}

bool is_var(const RatFunc& x, Var v) { return x == RatFunc::var(v); }

RatFunc specialize(RatFunc x, const Charges& ch) {
  if (!is_var(ch.e, Var::e)) x = x.subs(Var::e, ch.e);
  if (!is_var(ch.c, Var::c)) x = x.subs(Var::c, ch.c);
  return x;
}

std::string letters_string(const Letters& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += (l.slot == Slot::a ? "a[" : "b[") + std::to_string(l.index) + "]";
  }
  return s;
}

}  // namespace

std::string ModeWord::to_string() const { return "(" + scalar.to_string() + ")*" + letters_string(letters); }

RatFunc TraceExpr::moment(int i) const {
  auto it = alpha.find(i);
  return it == alpha.end() ? RatFunc() : it->second;
}

TraceExpr& TraceExpr::operator+=(const TraceExpr& o) {
  beta += o.beta;
  for (const auto& [i, a] : o.alpha) {
    auto [it, inserted] = alpha.try_emplace(i, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) alpha.erase(it);
    }
  }
  return *this;
}

TraceExpr TraceExpr::operator*(const RatFunc& s) const {
  TraceExpr out;
  if (s.is_zero()) return out;
  out.beta = beta * s;
  for (const auto& [i, a] : alpha) out.alpha.emplace(i, a * s);
  return out;
}

TraceExpr TraceExpr::subs(Var v, const RatFunc& value) const {
  TraceExpr out;
  out.beta = beta.subs(v, value);
  for (const auto& [i, a] : alpha) {
    RatFunc x = a.subs(v, value);
    if (!x.is_zero()) out.alpha.emplace(i, std::move(x));
  }
  return out;
}

RatFunc TraceExpr::evaluate(const std::vector<RatFunc>& moments) const {
  RatFunc r = beta;
  for (const auto& [i, a] : alpha)
    if (i < static_cast<int>(moments.size())) r += a * moments[i];
  return r;
}

std::string TraceExpr::to_string() const {
  std::string s = beta.is_zero() ? "" : beta.to_string();
  for (const auto& [i, a] : alpha) {
    if (!s.empty()) s += " + ";
    s += "(" + a.to_string() + ")*m" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

nlohmann::json TraceExpr::to_json() const {
  nlohmann::json a = nlohmann::json::object();
  for (const auto& [i, x] : alpha) a[std::to_string(i)] = x.to_string();
  return {{"beta", beta.to_string()}, {"alpha", a}};
}

std::vector<ModeWord> omode_expand(const TensorVector& v, int ambient_degree) {
  if (ambient_degree < 0) throw std::domain_error("ambient degree must be nonnegative");
  std::map<Letters, RatFunc> acc;
  for (const auto& [key, coef] : v.coeffs) {
    const int deg = key.first.degree() + key.second.degree();
    for (const auto& [word, k] : virasoro_expander().modes(monomial_letters(key), deg - 1, ambient_degree)) {
      auto [it, inserted] = acc.try_emplace(word, coef * RatFunc(k));
      if (!inserted) it->second += coef * RatFunc(k);
    }
  }
  std::vector<ModeWord> out;
  for (auto& [word, s] : acc)
    if (!s.is_zero()) out.push_back({std::move(s), word});
  return out;
}

TraceExpr trace_lowest(const TensorVector& v, const RatFunc& h, const Charges& charges) {
  const int deg = v.degree();
  std::map<int, RatFunc> alpha;
  for (const auto& [key, coef] : v.coeffs) {
    XPoly acc;
    for (const auto& [word, k] : virasoro_expander().modes(monomial_letters(key), deg - 1, 0))
      add_scaled(acc, lowest_reducer().reduce(word), MPoly(k));
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (!acc[i].is_zero()) alpha[static_cast<int>(i)] += coef * RatFunc(acc[i]);
  }
  TraceExpr out;
  for (auto& [i, a] : alpha) {
    RatFunc x = specialize(is_var(h, Var::h) ? a : a.subs(Var::h, h), charges);
    if (!x.is_zero()) out.alpha.emplace(i, std::move(x));
  }
  if (deg >= 0 && out.max_moment() > deg / 2)
    throw std::logic_error("moment index exceeds half the degree");
  return out;
}

TraceExpr trace_words_lowest(const std::vector<ModeWord>& words, const RatFunc& h, const Charges& charges) {
  std::map<int, RatFunc> alpha;
  for (const auto& w : words) {
    const XPoly& r = lowest_reducer().reduce(w.letters);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!r[i].is_zero()) alpha[static_cast<int>(i)] += w.scalar * RatFunc(r[i]);
  }
  TraceExpr out;
  for (auto& [i, a] : alpha) {
    RatFunc x = specialize(is_var(h, Var::h) ? a : a.subs(Var::h, h), charges);
    if (!x.is_zero()) out.alpha.emplace(i, std::move(x));
  }
  return out;
}

RatFunc trace_vacuum_block(const TensorVector& v, const Charges& charges) {
  const auto module = TensorModule::vacuum_pair(charges.c, charges.e);
  const TensorKey basis[] = {{Partition{{2}}, Partition{}}, {Partition{}, Partition{{2}}}};
  const int deg = v.degree();
  std::map<Letters, RatFunc> diag;
  auto diagonal = [&](const Letters& word) -> const RatFunc& {
    auto it = diag.find(word);
    if (it != diag.end()) return it->second;
    RatFunc total;
    for (const auto& b : basis) {
      TensorVector x;
      x.add(b, RatFunc(1));
      for (auto l = word.rbegin(); l != word.rend() && !x.is_zero(); ++l) x = module.lmode_apply(l->index, x, l->slot);
      total += x.coeff(b.first, b.second);
    }
    return diag.emplace(word, std::move(total)).first->second;
  };
  RatFunc out;
  for (const auto& [key, coef] : v.coeffs) {
    RatFunc acc;
    for (const auto& [word, k] : virasoro_expander().modes(monomial_letters(key), deg - 1, 2))
      acc += diagonal(word) * RatFunc(k);
    out += coef * acc;
  }
  return specialize(out, charges);
}

TraceExpr trace_V2(const TensorVector& v, const Charges& charges) {
  TraceExpr out = trace_lowest(v, RatFunc(2), charges);
  // m_i counts the vacuum slice too, where a_0 has eigenvalues 2 and 0.
  RatFunc beta = trace_vacuum_block(v, charges);
  for (const auto& [i, a] : out.alpha) beta -= a * RatFunc(pow(Rat(2), i) + (i == 0 ? 1 : 0));
  out.beta = beta;
  return out;
}

std::string EigenSplit::to_string() const {
  std::string s = constant.to_string();
  for (const auto& [l, d] : counts) s += " + (" + d.to_string() + ")*d[" + confdesign::to_string(l) + "]";
  return s;
}

EigenSplit eigensplit_substitute(const TraceExpr& t, const std::vector<Rat>& weights,
                                 const std::vector<Rat>& explicit_values) {
  EigenSplit out;
  out.constant = t.beta;
  for (const auto& [i, a] : t.alpha)
    for (const auto& x : explicit_values) out.constant += a * RatFunc(pow(x, i));
  for (const auto& l : weights) {
    RatFunc d;
    for (const auto& [i, a] : t.alpha) d += a * RatFunc(pow(l, i));
    out.counts[l] = d;
  }
  return out;
}

std::string FieldWord::to_string() const {
  std::string s;
  for (const auto& [k, n] : letters) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(k) + "(" + std::to_string(n) + ")";
  }
  return s.empty() ? "id" : s;
}

// Let o_j = o(a^j_(-1) ... a^l_(-1) 1) on V_1 and w = a^{j+1}_(-1) ... 1 of
// weight l-j. Associativity with m = -1 gives
//   o_j = sum_i [a^j_(-1-i) w_(l-j+i) + w_(l-j-1-i) a^j_(i)].
// On V_1 only i = 0 survives in the first sum (w_(l-j) maps V_1 to V_0 and
// equals a^l_(1) a^{l-1}_(0) ... a^{j+1}_(0) there), while the second sum
// gives o_{j+1} a^j_(0), plus a^{j+1}_(-1) a^j_(1) when w = a^{j+1}.
std::vector<FieldWord> v1_trace_expand(int l) {
  if (l < 1) throw std::domain_error("word length must be positive");
  std::vector<FieldWord> cur{FieldWord{{{l, 0}}}};
  for (int j = l - 1; j >= 1; --j) {
    std::vector<FieldWord> next;
    for (auto w : cur) {
      w.letters.emplace_back(j, 0);
      next.push_back(std::move(w));
    }
    FieldWord lowered{{{j, -1}, {l, 1}}};
    for (int k = l - 1; k > j; --k) lowered.letters.emplace_back(k, 0);
    next.push_back(std::move(lowered));
    if (j == l - 1) next.push_back(FieldWord{{{l, -1}, {j, 1}}});
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Normal orders a Heisenberg word: nonpositive modes left, positive right,
// each block sorted (modes within a block commute).
void heisenberg_normal_order(std::vector<int> word, const Rat& coef, const Rat& norm,
                             std::map<std::vector<int>, Rat>& out) {
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    if (word[j] > 0 && word[j + 1] <= 0) {
      const int p = word[j], q = word[j + 1];
      std::vector<int> swapped = word;
      std::swap(swapped[j], swapped[j + 1]);
      heisenberg_normal_order(swapped, coef, norm, out);
      if (p + q == 0) {
        std::vector<int> dropped(word.begin(), word.begin() + j);
        dropped.insert(dropped.end(), word.begin() + j + 2, word.end());
        heisenberg_normal_order(dropped, coef * p * norm, norm, out);
      }
      return;
    }
  }
  auto split = std::find_if(word.begin(), word.end(), [](int x) { return x > 0; });
  std::sort(word.begin(), split);
  std::sort(split, word.end());
  out[word] += coef;
}

using Fock = std::map<std::vector<int>, Rat>;  // sorted parts -> coefficient

Fock fock_apply(int n, const Fock& v, const Rat& norm) {
  Fock out;
  for (const auto& [parts, c] : v) {
    if (n < 0) {
      auto p = parts;
      p.insert(std::upper_bound(p.begin(), p.end(), -n), -n);
      out[p] += c;
    } else if (n > 0) {
      auto it = std::find(parts.begin(), parts.end(), n);
      if (it == parts.end()) continue;
      const long mult = std::count(parts.begin(), parts.end(), n);
      auto p = parts;
      p.erase(p.begin() + (it - parts.begin()));
      out[p] += c * n * norm * mult;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// L'_n = 1/2 sum_k :h_{n-k} h_k:
Fock sugawara_apply(int n, const Fock& v, const Rat& norm) {
  int deg = 0;
  for (const auto& [parts, c] : v)
    for (int p : parts) deg = std::max(deg, p);
  int bound = 0;
  for (const auto& [parts, c] : v) bound = std::max(bound, static_cast<int>(parts.size()) * deg);
  bound += std::abs(n) + 1;
  Fock out;
  for (int k = -bound; k <= bound; ++k) {
    const int first = std::max(n - k, k), second = std::min(n - k, k);
    for (const auto& [p, c] : fock_apply(second, fock_apply(first, v, norm), norm)) out[p] += c / 2;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

std::map<std::vector<int>, Rat> heisenberg_omode(const std::vector<int>& parts, const Rat& norm) {
  static Expander ex(1);
  Letters vec;
  int deg = 0;
  for (int p : parts) {
    if (p <= 0) throw std::domain_error("Fock monomial parts must be positive");
    vec.push_back({Slot::a, -p});
    deg += p;
  }
  std::map<std::vector<int>, Rat> out;
  for (const auto& [word, k] : ex.modes(vec, deg - 1, 1)) {
    std::vector<int> w;
    for (const auto& l : word) w.push_back(l.index);
    heisenberg_normal_order(w, k, norm, out);
  }
  // Keep the degree-preserving words that do not kill every state of
  // degree <= 1.
  std::erase_if(out, [](const auto& kv) {
    int shift = 0, lowering = 0;
    for (int x : kv.first) {
      shift += x;
      if (x > 0) lowering += x;
    }
    return kv.second == 0 || shift != 0 || lowering > 1;
  });
  return out;
}

Rat heisenberg_trace_check(const Rat& norm) {
  const std::vector<std::pair<std::vector<int>, Rat>> v = {{{3, 1}, Rat(8)}, {{2, 2}, Rat(-6)}, {{1, 1, 1, 1}, Rat(-2)}};
  // The vector is a Sugawara highest weight vector for <h,h> = 2.
  Fock state;
  for (const auto& [parts, c] : v) state[parts] += c;
  for (int n : {1, 2})
    if (!sugawara_apply(n, state, Rat(2)).empty())
      throw std::logic_error("v is not killed by L'_" + std::to_string(n));
  Rat dim_coef = 0, value = 0;
  for (const auto& [parts, c] : v) {
    for (const auto& [word, k] : heisenberg_omode(parts, norm)) {
      if (std::find(word.begin(), word.end(), 0) != word.end()) continue;  // h_0 = 0 on V_1
      if (word.empty()) {
        dim_coef += c * k;
      } else if (word == std::vector<int>{-1, 1}) {
        value += c * k * norm;  // h_{-1} h_1 x = <h,x> h
      } else {
        throw std::logic_error("unexpected word in o(v) on V_1");
      }
    }
  }
  if (dim_coef != 0) throw std::logic_error("trace of o(v) has a dim V_1 term");
  return value;
}

}  // namespace confdesign
