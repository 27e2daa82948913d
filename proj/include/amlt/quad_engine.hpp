#pragma once

// Numerical Laplace transforms of absolutely monotonic series, used as an
// oracle independent of the coefficient-level image.

#include <functional>
#include <vector>

#include "amlt/am_series.hpp"
#include "amlt/eval_result.hpp"

namespace amlt {

inline constexpr double kDefaultQuadTol = 1e-25;

/// Adaptive Gauss-Legendre integration of g over [a, b] by bisection; the
/// bound sums |G(panel) - G(left) - G(right)| over accepted panels.
/// Throws ToleranceUnreachable when the panel budget runs out.
EvalResult integrate_adaptive(const std::function<Real(const Real&)>& g, const Real& a, const Real& b,
                              const Real& tol);

/// Gauss-Legendre nodes and weights on [-1, 1] at the current precision.
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
const GaussRule& gauss_legendre(std::size_t n);

/// int_0^inf e^(-xt) phi(t) dt to within tol (plus the truncation bound of
/// the series). Needs a type-zero verdict to bound the tail beyond T.
EvalResult laplace_numeric(const AMSeries& s, const Real& x, const Real& tol = Real(kDefaultQuadTol));

/// int_0^inf e^(-xt) t^(lambda-1) phi(t) dt. For non-integer lambda the
/// piece over [0, 1] is summed term by term from the series.
EvalResult laplace_weighted_numeric(const AMSeries& s, const Real& lambda, const Real& x,
                                    const Real& tol = Real(kDefaultQuadTol));

} // namespace amlt
