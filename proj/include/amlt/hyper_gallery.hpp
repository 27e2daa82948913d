#pragma once

// Reference functions: H(x) = e^(1/x)/x, the 1F2 / 2F2 Laplace pair, its
// t^(lambda-1)-weighted version and the scaled family x^-lambda f.

#include <cstddef>
#include <optional>

#include "amlt/am_series.hpp"
#include "amlt/closed_form.hpp"
#include "amlt/eval_result.hpp"
#include "amlt/laplace_image.hpp"

namespace amlt {

struct HyperParams {
  Real a{1};
  Real b{1};
  Real c{1};
  std::optional<Real> lambda;

  /// Throws IndexOutOfRange unless a, b, c > 0; NonPositiveLambda for lambda <= 0.
  void validate() const;
};

/// a (a+1) ... (a+k-1)
Real pochhammer(const Real& a, std::size_t k);

/// sum (a)_k / ((b)_k (c)_k k!) t^k
AMSeries phi_1f2(const HyperParams& p, std::size_t truncation = kDefaultTruncation);

/// (1/x) 2F2(a, 1; b, c; 1/x), summed until a ratio bound closes the tail.
EvalResult f_2f2(const HyperParams& p, const Real& x);

/// Gamma(lambda) x^-lambda 2F2(a, lambda; b, c; 1/x)
EvalResult f_2f2_weighted(const HyperParams& p, const Real& x);

/// H as a closed form and as the image of its series 1/(k!)^2.
ClosedForm h_closed_form();
AMSeries h_series(std::size_t truncation = kDefaultTruncation);

/// (lambda - [lambda] - 1)(lambda - [lambda]) ... lambda
Real c_lambda(const Real& lambda);

struct ScaledFamily {
  InvPowerSeries series;  // offset lambda
  Real lambda;
  bool integer = false;
  /// First Widder order whose image fails, [lambda] + 2; empty for integer lambda.
  std::optional<std::size_t> failure_order;
  /// a_0 c_lambda, the n = 0 coefficient of widder_image(series, failure_order).
  Real leading_coefficient;
};

ScaledFamily scaled_family(const InvPowerSeries& ips, const Real& lambda);

} // namespace amlt
