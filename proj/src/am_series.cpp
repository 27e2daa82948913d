#include "amlt/am_series.hpp"

#include <algorithm>
#include <string>

#include "amlt/error.hpp"

namespace amlt {

const char* to_string(TypeCertificate c) {
  switch (c) {
  case TypeCertificate::certified_zero: return "certified_zero";
  case TypeCertificate::heuristic_zero: return "heuristic_zero";
  case TypeCertificate::unknown: return "unknown";
  case TypeCertificate::violated: return "violated";
  }
  return "unknown";
}

AMSeries::AMSeries(std::vector<Real> coeffs, std::size_t pad_to, TypeOptions options)
    : coeffs_(std::move(coeffs)), options_(options) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);

  Real scale(1);
  for (const auto& a : coeffs_) {
    if (!a.is_finite()) throw Error(ErrorKind::NegativeCoefficient, "non-finite coefficient");
    scale = max(scale, abs(a));
  }
  // Negatives at the level of serialization noise are clamped; anything
  // larger is a genuine violation of absolute monotonicity.
  const Real noise = ldexp(scale, 32 - Real::default_precision());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].sign() >= 0) continue;
    if (-coeffs_[n] <= noise) {
      coeffs_[n] = Real(0);
      clamped_.push_back(n);
    } else {
      throw Error(ErrorKind::NegativeCoefficient,
                  "coefficient a_" + std::to_string(n) + " = " + coeffs_[n].str(20) + " is negative", n);
    }
  }
  if (coeffs_.size() < pad_to + 1) coeffs_.resize(pad_to + 1, Real(0));
  type_ = estimate_type(coeffs_, options_);
}

TypeEstimate estimate_type(const std::vector<Real>& coeffs, const TypeOptions& options) {
  TypeEstimate est;
  const std::size_t N = coeffs.size() - 1;
  est.rates.assign(N + 1, Real(0));

  std::size_t last = 0;
  bool any = false;
  for (std::size_t n = 0; n <= N; ++n) {
    if (coeffs[n].sign() > 0) {
      last = n;
      any = true;
    }
  }

  Real log_fact(0);
  for (std::size_t n = 1; n <= N; ++n) {
    log_fact += log(Real(n));
    if (coeffs[n].sign() > 0) est.rates[n] = exp((log_fact + log(coeffs[n])) / Real(n));
  }

  if (!any || last == 0 || 2 * last <= N) {
    est.certificate = TypeCertificate::certified_zero;
    est.polynomial = true;
    est.tail_rate = Real(0);
    return est;
  }

  if (N < 8) {
    est.certificate = TypeCertificate::unknown;
    Real m(0);
    for (const auto& r : est.rates) m = max(m, r);
    est.tail_rate = m;
    return est;
  }

  // Maxima of r_n over four consecutive blocks covering the second half.
  const std::size_t start = (N + 1) / 2;
  const std::size_t span = N - start + 1;
  Real block_max[4];
  for (std::size_t b = 0; b < 4; ++b) {
    const std::size_t lo = start + b * span / 4;
    const std::size_t hi = start + (b + 1) * span / 4;
    block_max[b] = Real(0);
    for (std::size_t n = lo; n < hi; ++n) block_max[b] = max(block_max[b], est.rates[n]);
  }
  bool nonincreasing = true;
  for (std::size_t b = 1; b < 4; ++b) nonincreasing = nonincreasing && block_max[b] <= block_max[b - 1];

  est.tail_rate = block_max[3];
  const Real threshold(options.threshold);
  if (block_max[3] < threshold) {
    est.certificate = nonincreasing ? TypeCertificate::certified_zero : TypeCertificate::heuristic_zero;
  } else if (block_max[3] >= Real(0.9) * block_max[0]) {
    // The growth rate is not decaying: positive exponential type.
    est.certificate = TypeCertificate::violated;
  } else {
    est.certificate = TypeCertificate::unknown;
  }
  return est;
}

EvalResult eval_phi(const AMSeries& s, const Real& t) {
  if (t.sign() < 0) throw Error(ErrorKind::IndexOutOfRange, "eval_phi requires t >= 0");
  const long bits = Real::default_precision();
  const std::size_t N = s.truncation_order();
  EvalResult out;
  out.sign_definite = true;
  {
    PrecisionScope guard(bits + kGuardBits);
    Real sum(0);
    for (std::size_t i = N + 1; i-- > 0;) sum = sum * t + s.coeff(i);
    out.value = sum;
  }
  out.value.round_to(bits);

  if (!s.type_zero()) {
    out.abs_error_bound = Real::infinity();
    return out;
  }
  Real tail(0);
  const Real rt = s.type().tail_rate * t;
  if (!rt.is_zero()) {
    const Real ratio = rt / Real(N + 2);
    if (ratio < Real(1)) {
      Real first(1);
      for (std::size_t n = 1; n <= N + 1; ++n) first *= rt / Real(n);
      tail = first / (Real(1) - ratio);
    } else {
      tail = exp(rt);
    }
  }
  const Real u = Real::unit_roundoff(bits);
  out.abs_error_bound =
      tail + out.value * (s.coeff_rel_err() + u + Real(N + 4) * Real::unit_roundoff(bits + kGuardBits));
  return out;
}

AMSeries derivative_series(const AMSeries& s, std::size_t j) {
  const std::size_t N = s.truncation_order();
  if (j > N) throw Error(ErrorKind::OrderExceedsTruncation, "derivative order exceeds truncation order");
  std::vector<Real> b;
  b.reserve(N - j + 1);
  for (std::size_t n = 0; n + j <= N; ++n) {
    Real factor(1);
    for (std::size_t i = n + 1; i <= n + j; ++i) factor *= Real(i);
    b.push_back(s.coeff(n + j) * factor);
  }
  AMSeries out(std::move(b), 0, s.options());
  out.rel_err_ = s.rel_err_ + Real(j + 1) * Real::unit_roundoff(Real::default_precision());
  out.name_ = s.name_.empty() ? std::string() : s.name_ + "^(" + std::to_string(j) + ")";
  return out;
}

AMSeries weight_gamma(const AMSeries& s, const Real& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
  const std::size_t N = s.truncation_order();
  std::vector<Real> b;
  b.reserve(N + 1);
  // ratio_n = Gamma(n + lambda) / n!, built by the recurrence so that
  // lambda = 1 gives exactly 1 at every n.
  Real ratio = lambda == Real(1) ? Real(1) : tgamma(lambda);
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) ratio = ratio * (Real(n - 1) + lambda) / Real(n);
    b.push_back(s.coeff(n) * ratio);
  }
  AMSeries out(std::move(b), 0, s.options());
  const Real u = Real::unit_roundoff(Real::default_precision());
  out.rel_err_ = lambda == Real(1) ? s.rel_err_ : s.rel_err_ + Real(3 * N + 4) * u;
  out.name_ = s.name_;
  return out;
}

} // namespace amlt
