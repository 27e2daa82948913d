#include "amlt/hyper_gallery.hpp"

#include <string>

#include "amlt/error.hpp"

namespace amlt {

namespace {

constexpr std::size_t kMaxHyperTerms = 200000;

// Sum of terms t_0, t_1, ... with t_(n+1) = t_n * ratio(n). theta(n) bounds
// every later ratio; the loop stops once the geometric tail is below one ulp.
template <class Ratio, class Theta>
EvalResult ratio_sum(const Real& first, Ratio ratio, Theta theta) {
  const long bits = Real::default_precision();
  Real sum(0), tail(0);
  std::size_t terms = 0;
  {
    PrecisionScope guard(bits + kGuardBits);
    sum = Real(0);
    const Real target = Real::unit_roundoff(bits + 8);
    Real term = first;
    for (std::size_t n = 0;; ++n) {
      sum += term;
      ++terms;
      Real next = term * ratio(n);
      const Real th = theta(n + 1);
      if (th < Real(1) / Real(2) && abs(next) <= target * abs(sum)) {
        tail = abs(next) / (Real(1) - th);
        break;
      }
      if (n > kMaxHyperTerms) throw Error(ErrorKind::DivergentAt, "hypergeometric sum did not settle");
      term = std::move(next);
    }
  }
  EvalResult r;
  r.value = sum;
  r.value.round_to(bits);
  r.abs_error_bound = tail + abs(r.value) * Real(terms * 4 + 2) * Real::unit_roundoff(bits + kGuardBits) +
                      abs(r.value) * Real::unit_roundoff(bits);
  r.sign_definite = true;
  return r;
}

} // namespace

void HyperParams::validate() const {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
    throw Error(ErrorKind::IndexOutOfRange, "hypergeometric parameters a, b, c must be positive");
  if (lambda && lambda->sign() <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
}

Real pochhammer(const Real& a, std::size_t k) {
  Real r(1);
  for (std::size_t i = 0; i < k; ++i) r *= a + Real(i);
  return r;
}

AMSeries phi_1f2(const HyperParams& p, std::size_t truncation) {
  p.validate();
  std::vector<Real> coeffs;
  coeffs.reserve(truncation + 1);
  const long bits = Real::default_precision();
  {
    PrecisionScope guard(bits + kGuardBits);
    Real c(1);
    for (std::size_t k = 0; k <= truncation; ++k) {
      if (k > 0) c = c * (p.a + Real(k - 1)) / ((p.b + Real(k - 1)) * (p.c + Real(k - 1)) * Real(k));
      coeffs.push_back(c);
    }
  }
  for (auto& v : coeffs) v.round_to(bits);
  AMSeries s(std::move(coeffs), truncation);
  s.set_name("1F2(" + p.a.str(12) + "; " + p.b.str(12) + ", " + p.c.str(12) + "; t)");
  return s;
}

EvalResult f_2f2(const HyperParams& p, const Real& x) {
  p.validate();
  if (x.sign() <= 0) throw Error(ErrorKind::DivergentAt, "f_2f2 requires x > 0");
  auto ratio = [&](std::size_t n) {
    const Real rn(n);
    return (p.a + rn) / ((p.b + rn) * (p.c + rn) * x);
  };
  auto theta = [&](std::size_t n) {
    const Real rn(n);
    return max(Real(1), (p.a + rn) / (p.b + rn)) / ((p.c + rn) * x);
  };
  return ratio_sum(Real(1) / x, ratio, theta);
}

EvalResult f_2f2_weighted(const HyperParams& p, const Real& x) {
  p.validate();
  if (!p.lambda) throw Error(ErrorKind::NonPositiveLambda, "f_2f2_weighted needs lambda");
  if (x.sign() <= 0) throw Error(ErrorKind::DivergentAt, "f_2f2_weighted requires x > 0");
  const Real& lam = *p.lambda;
  auto ratio = [&](std::size_t n) {
    const Real rn(n);
    return (p.a + rn) * (lam + rn) / ((p.b + rn) * (p.c + rn) * (rn + Real(1)) * x);
  };
  auto theta = [&](std::size_t n) {
    const Real rn(n);
    return max(Real(1), (p.a + rn) / (p.b + rn)) * max(Real(1), (lam + rn) / (p.c + rn)) / ((rn + Real(1)) * x);
  };
  EvalResult series = ratio_sum(Real(1), ratio, theta);
  const long bits = Real::default_precision();
  Real prefactor;
  {
    PrecisionScope guard(bits + kGuardBits);
    prefactor = tgamma(lam) / pow(x, lam);
  }
  prefactor.round_to(bits);
  EvalResult r = prefactor * series;
  r.abs_error_bound += abs(r.value) * Real(4) * Real::unit_roundoff(bits);
  r.sign_definite = true;
  return r;
}

ClosedForm h_closed_form() { return ClosedForm::shifted_power(Real(0), Real(-1)) * ClosedForm::exp_inverse(Real(1)); }

AMSeries h_series(std::size_t truncation) {
  AMSeries s = phi_1f2(HyperParams{Real(1), Real(1), Real(1), std::nullopt}, truncation);
  s.set_name("h");
  return s;
}

Real c_lambda(const Real& lambda) {
  const Real fl = floor(lambda);
  Real r(1);
  for (Real v = lambda - fl - Real(1); v <= lambda; v += Real(1)) r *= v;
  return r;
}

ScaledFamily scaled_family(const InvPowerSeries& ips, const Real& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
  if (!ips.offset().is_zero()) throw Error(ErrorKind::OffsetNotZero, "scaled_family expects offset 0");
  ScaledFamily out{ips.times_power(-lambda), lambda, lambda.is_integer(), std::nullopt, Real(0)};
  if (!out.integer) {
    out.failure_order = static_cast<std::size_t>(floor(lambda).to_long()) + 2;
    const Real a0 = ips.coeffs().empty() ? Real(0) : ips.coeffs().front();
    out.leading_coefficient = a0 * c_lambda(lambda);
  }
  return out;
}

} // namespace amlt
