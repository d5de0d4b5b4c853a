#include "confdesign/algebra/ratfunc.hpp"

#include <cctype>
#include <stdexcept>

namespace confdesign {

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Rat s = den_.content();
  den_ *= Rat(1) / s;
  num_ *= Rat(1) / s;
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("rational function is not constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = MPoly(1);
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  // a/b + c/d with b = g b', d = g d': only g can share factors with the
  // new numerator.
  const MPoly g = gcd(den_, o.den_);
  const MPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  MPoly n = num_ * d1 + o.num_ * b1;
  MPoly d = b1 * d1 * g;
  if (n.is_zero()) {
    num_ = MPoly{};
    den_ = MPoly(1);
    return *this;
  }
  if (!g.is_constant()) {
    const MPoly h = gcd(n, g);
    if (!h.is_constant()) {
      n = exact_div(n, h);
      d = exact_div(d, h);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  const Rat s = den_.content();
  den_ *= Rat(1) / s;
  num_ *= Rat(1) / s;
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    num_ = MPoly{};
    den_ = MPoly(1);
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    num_ *= Rat(1) / (den_.constant_value() * o.den_.constant_value());
    den_ = MPoly(1);
    return *this;
  }
  MPoly a = num_, b = den_, c = o.num_, d = o.den_;
  const MPoly g1 = gcd(a, d), g2 = gcd(c, b);
  if (!g1.is_constant()) {
    a = exact_div(a, g1);
    d = exact_div(d, g1);
  }
  if (!g2.is_constant()) {
    c = exact_div(c, g2);
    b = exact_div(b, g2);
  }
  num_ = a * c;
  den_ = b * d;
  const Rat s = den_.content();
  den_ *= Rat(1) / s;
  num_ *= Rat(1) / s;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  RatFunc inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  const Rat s = inv.den_.content();
  inv.den_ *= Rat(1) / s;
  inv.num_ *= Rat(1) / s;
  return *this *= inv;
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return RatFunc(1) / pow(-k);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(k));
  r.den_ = den_.pow(static_cast<unsigned>(k));
  if (k == 0) r = RatFunc(1);
  return r;
}

RatFunc RatFunc::subs(Var v, const Rat& value) const {
  if (!has_var(v)) return *this;
  MPoly d = den_.subs(v, value);
  if (d.is_zero())
    throw std::domain_error("denominator " + den_.to_string() + " vanishes at " + var_name(v) + " = " +
                            confdesign::to_string(value));
  return RatFunc(num_.subs(v, value), d);
}

RatFunc RatFunc::subs(Var v, const RatFunc& value) const {
  if (!has_var(v)) return *this;
  auto sub_poly = [&](const MPoly& p) {
    RatFunc r;
    auto coeffs = p.coefficients_in(v);
    for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value + RatFunc(coeffs[k]);
    return r;
  };
  return sub_poly(num_) / sub_poly(den_);
}

Rat RatFunc::eval(const std::array<Rat, kNumVars>& point) const {
  const Rat d = den_.eval(point);
  if (d == 0) throw std::domain_error("denominator " + den_.to_string() + " vanishes at evaluation point");
  return num_.eval(point) / d;
}

std::string RatFunc::to_string() const {
  if (den_ == MPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ----------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) r *= unary();
      else if (eat('/')) r /= unary();
      else return r;
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      const long k = integer();
      return base.pow(neg ? -k : k);
    }
    return base;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rat(Int(std::string(s_.substr(start, pos_ - start)))));
    }
    ++pos_;
    switch (ch) {
      case 'c': return RatFunc::var(Var::c);
      case 'e': return RatFunc::var(Var::e);
      case 'h': return RatFunc::var(Var::h);
      case 'n': return RatFunc::var(Var::n);
      default: --pos_; fail("unknown symbol");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

}  // namespace confdesign
