#include "amlt/check_report.hpp"

namespace amlt {

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::pass: return "pass";
  case Verdict::fail: return "fail";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict sign_verdict(const EvalResult& r, int required_sign, const Real& local_scale, const Tolerances& tol) {
  if (r.value.is_nan()) return Verdict::inconclusive;
  // Exact zero, or every contribution of one sign: the sign is certain.
  if (r.sign_definite) {
    if (r.value.is_zero()) return Verdict::pass;
    return r.value.sign() == required_sign ? Verdict::pass : Verdict::fail;
  }
  const Real slack = max(tol.abs_tol, tol.rel_tol * abs(local_scale));
  const Real margin = r.abs_error_bound + slack;
  if (abs(r.value) <= margin) return Verdict::inconclusive;
  return r.value.sign() == required_sign ? Verdict::pass : Verdict::fail;
}

void CheckReport::finalize() {
  bool any_fail = false, any_inconclusive = false;
  for (const auto& e : entries) {
    any_fail = any_fail || e.verdict == Verdict::fail;
    any_inconclusive = any_inconclusive || e.verdict == Verdict::inconclusive;
  }
  for (const auto& w : witnesses) any_fail = any_fail || !w.holds;
  summary = any_fail ? Verdict::fail : (any_inconclusive ? Verdict::inconclusive : Verdict::pass);
}

void CheckReport::append(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  finalize();
}

} // namespace amlt
