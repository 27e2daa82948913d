#pragma once

#include "amlt/real.hpp"

namespace amlt {

/// A value together with an absolute error bound.
///
/// `sign_definite` is set when every contribution to the value (including
/// the bounded truncation tail) has the same sign, so the sign of `value`
/// is exact even if `value` is tiny compared with `abs_error_bound`.
struct EvalResult {
  Real value;
  Real abs_error_bound;
  bool sign_definite = false;

  bool bounded() const { return abs_error_bound.is_finite(); }
  bool contains(const Real& v) const { return abs(v - value) <= abs_error_bound; }
};

inline EvalResult exact(Real v) {
  EvalResult r{std::move(v), Real(0), true};
  return r;
}

EvalResult operator+(const EvalResult& a, const EvalResult& b);
EvalResult operator-(const EvalResult& a, const EvalResult& b);
/// Scaling by a value that is itself exact up to one rounding.
EvalResult operator*(const Real& s, const EvalResult& a);

/// |a - b| <= a.bound + b.bound
bool agree(const EvalResult& a, const EvalResult& b);

/// |a - b| / max(|a|, |b|); zero when both are zero.
Real relative_difference(const Real& a, const Real& b);

} // namespace amlt
