#include "amlt/eval_result.hpp"

namespace amlt {

namespace {

bool same_sign_definite(const EvalResult& a, int sa, const EvalResult& b, int sb) {
  if (!a.sign_definite || !b.sign_definite) return false;
  return sa == 0 || sb == 0 || sa == sb;
}

Real rounding(const Real& v) { return abs(v) * Real::unit_roundoff(Real::default_precision()); }

} // namespace

EvalResult operator+(const EvalResult& a, const EvalResult& b) {
  EvalResult r;
  r.value = a.value + b.value;
  r.abs_error_bound = a.abs_error_bound + b.abs_error_bound + rounding(r.value);
  r.sign_definite = same_sign_definite(a, a.value.sign(), b, b.value.sign());
  return r;
}

EvalResult operator-(const EvalResult& a, const EvalResult& b) {
  EvalResult r;
  r.value = a.value - b.value;
  r.abs_error_bound = a.abs_error_bound + b.abs_error_bound + rounding(r.value);
  r.sign_definite = same_sign_definite(a, a.value.sign(), b, -b.value.sign());
  return r;
}

EvalResult operator*(const Real& s, const EvalResult& a) {
  EvalResult r;
  r.value = s * a.value;
  r.abs_error_bound = abs(s) * a.abs_error_bound + Real(2) * rounding(r.value);
  r.sign_definite = a.sign_definite;
  return r;
}

bool agree(const EvalResult& a, const EvalResult& b) {
  return abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound;
}

Real relative_difference(const Real& a, const Real& b) {
  const Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return Real(0);
  return abs(a - b) / scale;
}

} // namespace amlt
