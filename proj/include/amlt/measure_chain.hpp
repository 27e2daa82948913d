#pragma once

// Representing measures on grids: sigma_j with cdf t^j p^(j)(t), the step
// d mu_k = t d mu_(k-1) - (k-1) mu_(k-1)([0,t]) dt, positivity verdicts and
// Laplace-Stieltjes transforms by quadrature.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amlt/am_series.hpp"
#include "amlt/check_report.hpp"
#include "amlt/eval_result.hpp"

namespace amlt {

/// Atom at the origin plus a density sampled on grid nodes. Measures built
/// from a series also carry the power series of density and cdf in t.
struct GridMeasure {
  Real atom0{0};
  std::vector<Real> grid;
  std::vector<Real> density;
  std::vector<Real> cdf;
  std::optional<std::vector<Real>> density_series;
  std::optional<std::vector<Real>> cdf_series;
  std::string label;

  std::size_t size() const { return grid.size(); }
  /// Throws IndexOutOfRange on size mismatch or a grid that is not strictly increasing from 0.
  void validate() const;
};

inline constexpr double kDefaultMeasureEnd = 40.0;
inline constexpr std::size_t kDefaultMeasureIntervals = 2048;

/// 0, a geometric run up to 1/2, then equal steps to t_end. Interval count is
/// rounded up to a multiple of 4.
std::vector<Real> default_measure_grid(const Real& t_end = Real(kDefaultMeasureEnd),
                                       std::size_t intervals = kDefaultMeasureIntervals);

/// Measure whose cdf is t^j p^(j)(t).
GridMeasure sigma_j(const AMSeries& p, std::size_t j, const std::vector<Real>& grid = default_measure_grid());

/// density_new = t density_prev - (k-1) cdf_prev, no atom.
GridMeasure mu_step(const GridMeasure& prev, std::size_t k);

/// Hand-built measure; cdf by trapezoidal accumulation.
GridMeasure hand_built_measure(const Real& atom0, std::vector<Real> grid, std::vector<Real> density);

/// sigma_0..sigma_(k-1) followed by mu_step(sigma_(k-1), k).
std::vector<GridMeasure> measure_chain(const AMSeries& p, std::size_t k,
                                       const std::vector<Real>& grid = default_measure_grid());

/// pass iff atom0 >= -tol and min density >= -tol * max|density|.
Verdict positivity_check(const GridMeasure& m, const Real& tol = Real(1e-30));

struct MeasureTransform {
  EvalResult result;
  /// Support continues past the last node; the missing piece is in tail_bound
  /// (infinite when the measure has no series to bound it with).
  bool grid_truncated = false;
  Real tail_bound{0};
};

/// atom0 + int e^(-xt) density dt over the grid: Simpson on pairs of
/// intervals, extrapolated against the rule on doubled panels, whose
/// difference is the error bound. The tail beyond the grid is not added to
/// the value; it is reported and included in the bound.
MeasureTransform laplace_of_measure(const GridMeasure& m, const Real& x);

/// Values of a power series in t at guard precision.
Real eval_power_series(const std::vector<Real>& coeffs, const Real& t);

/// Columns t, density, cdf; extra columns appended when given (same length as grid).
std::string measure_csv(const GridMeasure& m, const std::vector<std::pair<std::string, std::vector<Real>>>& extra = {});

} // namespace amlt
