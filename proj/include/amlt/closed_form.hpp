#pragma once

// A small closed-form family with exact symbolic derivatives:
// finite sums of terms  coef * prod_i (x + c_i)^(q_i) * exp(beta / x).
//
// The family is closed under differentiation and multiplication by x^a,
// which is all the Widder and Sokal operators need. Like terms are merged,
// so identities such as (x * x^-1)' = 0 come out exactly zero.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amlt/eval_result.hpp"
#include "amlt/real.hpp"

namespace amlt {

struct ClosedTerm {
  Real coef;
  /// (shift c, exponent q) pairs, sorted by shift, exponents nonzero.
  std::vector<std::pair<Real, Real>> factors;
  Real beta;
};

class ClosedForm {
public:
  ClosedForm() = default;
  explicit ClosedForm(std::vector<ClosedTerm> terms);

  static ClosedForm constant(const Real& c);
  /// c * (x + shift)^q
  static ClosedForm shifted_power(const Real& shift, const Real& q, const Real& c = Real(1));
  /// exp(beta / x)
  static ClosedForm exp_inverse(const Real& beta);

  /// Parses expressions like "1/(x+1)", "x^-1*exp(1/x)", "2/x^3 + 1/x".
  /// Throws Error(SpecParse) with the column in index().
  static ClosedForm parse(std::string_view text);

  const std::vector<ClosedTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ClosedForm derivative(std::size_t m = 1) const;
  ClosedForm times_power(const Real& a) const;
  ClosedForm scaled(const Real& s) const;

  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);

  /// Exact up to rounding; sign_definite when all terms share a sign.
  EvalResult eval(const Real& x) const;

  std::string str() const;

private:
  void canonicalize();

  std::vector<ClosedTerm> terms_;
  Real rel_err_;
};

} // namespace amlt
