#include "amlt/closed_form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "amlt/error.hpp"

namespace amlt {

namespace {

bool same_shape(const ClosedTerm& a, const ClosedTerm& b) {
  if (!(a.beta == b.beta) || a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (!(a.factors[i].first == b.factors[i].first) || !(a.factors[i].second == b.factors[i].second)) return false;
  return true;
}

void normalize_factors(ClosedTerm& t) {
  auto& f = t.factors;
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Real, Real>> merged;
  for (auto& p : f) {
    if (!merged.empty() && merged.back().first == p.first) merged.back().second += p.second;
    else merged.push_back(std::move(p));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& p) { return p.second.is_zero(); }),
               merged.end());
  f = std::move(merged);
}

ClosedTerm multiply(const ClosedTerm& a, const ClosedTerm& b) {
  ClosedTerm t;
  t.coef = a.coef * b.coef;
  t.beta = a.beta + b.beta;
  t.factors = a.factors;
  t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
  normalize_factors(t);
  return t;
}

// ---- parser ---------------------------------------------------------------

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  ClosedForm parse() {
    ClosedForm e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SpecParse, "closed form, column " + std::to_string(pos_ + 1) + ": " + msg, pos_ + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ClosedForm expr() {
    ClosedForm acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = acc.scaled(Real(-1));
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc + term().scaled(Real(-1));
      else return acc;
    }
  }

  ClosedForm term() {
    ClosedForm acc = unary();
    for (;;) {
      if (accept('*')) acc = acc * unary();
      else if (accept('/')) acc = acc * reciprocal(unary());
      else return acc;
    }
  }

  ClosedForm unary() {
    if (accept('-')) return unary().scaled(Real(-1));
    ClosedForm base = primary();
    if (accept('^')) {
      return power(base, exponent());
    }
    return base;
  }

  // Signed rational exponent, optionally parenthesised: ^2, ^-1, ^(-3/2).
  Real exponent() {
    const bool paren = accept('(');
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    skip();
    Real p = number();
    if (accept('/')) {
      skip();
      p /= number();
    }
    if (paren) expect(')');
    return neg ? -p : p;
  }

  ClosedForm primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (accept('(')) {
      ClosedForm e = expr();
      expect(')');
      return as_factor_if_linear(e);
    }
    if (s_.compare(pos_, 3, "exp") == 0) {
      pos_ += 3;
      expect('(');
      ClosedForm arg = expr();
      expect(')');
      return exponential(arg);
    }
    if (c == 'x') {
      ++pos_;
      return ClosedForm::shifted_power(Real(0), Real(1));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ClosedForm::constant(number());
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Real number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ + 1 < s_.size() &&
        s_.compare(pos_, 3, "exp") != 0) {
      std::size_t p = pos_ + 1;
      if (s_[p] == '+' || s_[p] == '-') ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    if (start == pos_) fail("expected a number");
    try {
      return Real::parse(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      fail("bad number");
    }
  }

  static bool single(const ClosedForm& f) { return f.terms().size() == 1; }

  // x + c  (possibly scaled) becomes the factor k (x + c).
  ClosedForm as_factor_if_linear(const ClosedForm& e) {
    if (e.terms().size() != 2) return e;
    const ClosedTerm* lin = nullptr;
    const ClosedTerm* cst = nullptr;
    for (const auto& t : e.terms()) {
      if (!t.beta.is_zero()) return e;
      if (t.factors.empty()) cst = &t;
      else if (t.factors.size() == 1 && t.factors[0].first.is_zero() && t.factors[0].second == Real(1)) lin = &t;
    }
    if (lin == nullptr || cst == nullptr) return e;
    return ClosedForm::shifted_power(cst->coef / lin->coef, Real(1), lin->coef);
  }

  ClosedForm reciprocal(const ClosedForm& f) {
    if (!single(f)) fail("can only divide by a single product term");
    const ClosedTerm& t = f.terms()[0];
    if (t.coef.is_zero()) fail("division by zero");
    ClosedTerm r;
    r.coef = Real(1) / t.coef;
    r.beta = -t.beta;
    for (const auto& [c, q] : t.factors) r.factors.emplace_back(c, -q);
    return ClosedForm({r});
  }

  ClosedForm power(const ClosedForm& f, const Real& p) {
    if (f.is_zero()) return f;
    if (!single(f)) fail("can only raise a single product term to a power");
    const ClosedTerm& t = f.terms()[0];
    ClosedTerm r;
    if (t.coef.sign() < 0 && !p.is_integer()) fail("negative base with fractional exponent");
    r.coef = amlt::pow(t.coef, p);
    r.beta = t.beta * p;
    for (const auto& [c, q] : t.factors) r.factors.emplace_back(c, q * p);
    return ClosedForm({r});
  }

  ClosedForm exponential(const ClosedForm& arg) {
    if (arg.is_zero()) return ClosedForm::constant(Real(1));
    if (!single(arg)) fail("exp() argument must be beta/x or a constant");
    const ClosedTerm& t = arg.terms()[0];
    if (!t.beta.is_zero()) fail("nested exp() is outside the closed-form family");
    if (t.factors.empty()) return ClosedForm::constant(amlt::exp(t.coef));
    if (t.factors.size() == 1 && t.factors[0].first.is_zero() && t.factors[0].second == Real(-1))
      return ClosedForm::exp_inverse(t.coef);
    fail("exp() argument must be beta/x or a constant");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

ClosedForm::ClosedForm(std::vector<ClosedTerm> terms) : terms_(std::move(terms)) {
  for (auto& t : terms_) normalize_factors(t);
  canonicalize();
}

ClosedForm ClosedForm::constant(const Real& c) {
  ClosedTerm t{c, {}, Real(0)};
  return ClosedForm({t});
}

ClosedForm ClosedForm::shifted_power(const Real& shift, const Real& q, const Real& c) {
  ClosedTerm t{c, {{shift, q}}, Real(0)};
  return ClosedForm({t});
}

ClosedForm ClosedForm::exp_inverse(const Real& beta) {
  ClosedTerm t{Real(1), {}, beta};
  return ClosedForm({t});
}

ClosedForm ClosedForm::parse(std::string_view text) { return Parser(text).parse(); }

void ClosedForm::canonicalize() {
  std::vector<ClosedTerm> out;
  for (auto& t : terms_) {
    if (t.coef.is_zero()) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const ClosedTerm& o) { return same_shape(o, t); });
    if (it != out.end()) it->coef += t.coef;
    else out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const ClosedTerm& t) { return t.coef.is_zero(); }), out.end());
  terms_ = std::move(out);
}

ClosedForm ClosedForm::derivative(std::size_t m) const {
  ClosedForm cur = *this;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<ClosedTerm> next;
    for (const auto& t : cur.terms_) {
      for (std::size_t i = 0; i < t.factors.size(); ++i) {
        ClosedTerm d = t;
        d.coef = t.coef * t.factors[i].second;
        d.factors[i].second -= Real(1);
        normalize_factors(d);
        next.push_back(std::move(d));
      }
      if (!t.beta.is_zero()) {
        // (exp(beta/x))' = -beta x^-2 exp(beta/x)
        ClosedTerm d = t;
        d.coef = -t.coef * t.beta;
        d.factors.emplace_back(Real(0), Real(-2));
        normalize_factors(d);
        next.push_back(std::move(d));
      }
    }
    Real rel = cur.rel_err_ + Real(2) * Real::unit_roundoff(Real::default_precision());
    cur = ClosedForm(std::move(next));
    cur.rel_err_ = rel;
  }
  return cur;
}

ClosedForm ClosedForm::times_power(const Real& a) const {
  std::vector<ClosedTerm> out = terms_;
  for (auto& t : out) {
    t.factors.emplace_back(Real(0), a);
    normalize_factors(t);
  }
  ClosedForm r(std::move(out));
  r.rel_err_ = rel_err_;
  return r;
}

ClosedForm ClosedForm::scaled(const Real& s) const {
  std::vector<ClosedTerm> out = terms_;
  for (auto& t : out) t.coef *= s;
  ClosedForm r(std::move(out));
  r.rel_err_ = rel_err_ + Real::unit_roundoff(Real::default_precision());
  return r;
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
  std::vector<ClosedTerm> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  ClosedForm r(std::move(out));
  r.rel_err_ = max(a.rel_err_, b.rel_err_) + Real::unit_roundoff(Real::default_precision());
  return r;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  std::vector<ClosedTerm> out;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) out.push_back(multiply(ta, tb));
  ClosedForm r(std::move(out));
  r.rel_err_ = a.rel_err_ + b.rel_err_ + Real(2) * Real::unit_roundoff(Real::default_precision());
  return r;
}

EvalResult ClosedForm::eval(const Real& x) const {
  const long bits = Real::default_precision();
  EvalResult out;
  Real abs_sum;
  int sign = 0;
  std::size_t ops = 4;
  {
    PrecisionScope guard(bits + kGuardBits);
    Real sum(0);
    abs_sum = Real(0);
    for (const auto& t : terms_) {
      Real v = t.coef;
      for (const auto& [c, q] : t.factors) {
        const Real base = x + c;
        if (base.sign() <= 0)
          throw Error(ErrorKind::IndexOutOfRange, "closed form evaluated outside its domain at x = " + x.str(12));
        v *= q.is_integer() ? amlt::pow(base, q.to_long()) : amlt::pow(base, q);
      }
      if (!t.beta.is_zero()) v *= amlt::exp(t.beta / x);
      ops = std::max(ops, 2 * t.factors.size() + 6);
      sum += v;
      abs_sum += abs(v);
      const int s = t.coef.sign();
      if (sign == 0) sign = s;
      else if (sign != s) sign = 2;
    }
    out.value = sum;
  }
  out.value.round_to(bits);
  Real bound = abs_sum * (rel_err_ + Real(ops + terms_.size()) * Real::unit_roundoff(bits + kGuardBits)) +
               abs(out.value) * Real::unit_roundoff(bits);
  bound.round_to(bits);
  out.abs_error_bound = bound;
  out.sign_definite = sign != 2;
  return out;
}

std::string ClosedForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coef.str(17);
    for (const auto& [c, q] : t.factors) {
      if (c.is_zero()) os << "*x^(" << q.str(17) << ")";
      else os << "*(x+" << c.str(17) << ")^(" << q.str(17) << ")";
    }
    if (!t.beta.is_zero()) os << "*exp(" << t.beta.str(17) << "/x)";
  }
  return os.str();
}

} // namespace amlt
