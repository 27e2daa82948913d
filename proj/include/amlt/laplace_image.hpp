#pragma once

// Laplace images of absolutely monotonic series as inverse-power series
//
//   f(x) = sum_n c_n x^(-n-1-offset),
//
// together with the coefficient-level operator algebra (multiplication
// by x^a, differentiation, scaling) that the Widder-type checks run on.

#include <cstddef>
#include <vector>

#include "amlt/am_series.hpp"
#include "amlt/eval_result.hpp"
#include "amlt/real.hpp"

namespace amlt {

/// Majorant for the coefficients beyond the stored ones:
///   |c_n| <= scale * rho^n * (n + shift)^degree   for n > N,
/// with every such c_n having sign `sign` (0 when not known).
struct TailModel {
  bool known = false;
  Real rho;
  Real scale{1};
  Real shift{1};
  long degree = 0;
  int sign = 0;
};

class InvPowerSeries {
public:
  InvPowerSeries() : coeffs_{Real(0)} {}
  /// A finite series: the stored coefficients are the whole function.
  explicit InvPowerSeries(std::vector<Real> coeffs, Real offset = Real(0));
  InvPowerSeries(std::vector<Real> coeffs, Real offset, TailModel tail, Real coeff_rel_err);

  const std::vector<Real>& coeffs() const { return coeffs_; }
  const Real& coeff(std::size_t n) const { return coeffs_[n]; }
  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  const Real& offset() const { return offset_; }
  const TailModel& tail() const { return tail_; }
  const Real& coeff_rel_err() const { return rel_err_; }
  /// No nonzero coefficient beyond the stored ones.
  bool finite() const { return tail_.known && tail_.rho.is_zero(); }

  /// x^a * f
  InvPowerSeries times_power(const Real& a) const;
  /// f^(m)
  InvPowerSeries derivative(std::size_t m) const;
  /// s * f
  InvPowerSeries scaled(const Real& s) const;

private:
  std::vector<Real> coeffs_;
  Real offset_;
  TailModel tail_{true, Real(0), Real(0), Real(1), 0, 0};
  Real rel_err_;
};

/// c_k = a_k k!, offset 0.
InvPowerSeries laplace_coeffs(const AMSeries& s);

/// sum c_n x^(-n-1-offset). Throws DivergentAt when the terms grow over
/// the last quarter of the stored range.
EvalResult eval_image(const InvPowerSeries& ips, const Real& x);

/// Head a_1..a_n and tail x^n R_n(x) = sum_m c_(n+m) x^(-m-1).
struct RemainderSplit {
  std::vector<Real> head;
  InvPowerSeries tail;
  std::size_t order = 0;
};

RemainderSplit split_remainder(const InvPowerSeries& ips, std::size_t n);

/// sum_k head_k x^-k + x^-n * tail(x), summed at guard precision.
EvalResult reconstruct(const RemainderSplit& split, const Real& x);

} // namespace amlt
