#include "amlt/measure_chain.hpp"

#include <sstream>

#include "amlt/error.hpp"

namespace amlt {

namespace {

std::vector<Real> series_derivative(const std::vector<Real>& c) {
  std::vector<Real> d;
  for (std::size_t m = 1; m < c.size(); ++m) d.push_back(Real(m) * c[m]);
  if (d.empty()) d.emplace_back(0);
  return d;
}

std::vector<Real> sample(const std::vector<Real>& coeffs, const std::vector<Real>& grid) {
  std::vector<Real> out;
  out.reserve(grid.size());
  for (const auto& t : grid) out.push_back(eval_power_series(coeffs, t));
  return out;
}

std::vector<Real> trapezoid_cdf(const Real& atom0, const std::vector<Real>& grid, const std::vector<Real>& density) {
  std::vector<Real> cdf;
  cdf.reserve(grid.size());
  Real acc = atom0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) acc += (grid[i] - grid[i - 1]) * (density[i - 1] + density[i]) / Real(2);
    cdf.push_back(acc);
  }
  return cdf;
}

// Simpson on nodes a < b < c with arbitrary spacing.
Real simpson3(const Real& t0, const Real& t1, const Real& t2, const Real& g0, const Real& g1, const Real& g2) {
  const Real h0 = t1 - t0;
  const Real h1 = t2 - t1;
  const Real h = h0 + h1;
  return h / Real(6) * ((Real(2) - h1 / h0) * g0 + h * h / (h0 * h1) * g1 + (Real(2) - h0 / h1) * g2);
}

} // namespace

void GridMeasure::validate() const {
  if (grid.empty()) throw Error(ErrorKind::IndexOutOfRange, "measure grid is empty");
  if (density.size() != grid.size() || cdf.size() != grid.size())
    throw Error(ErrorKind::IndexOutOfRange, "grid, density and cdf lengths differ");
  if (!grid.front().is_zero()) throw Error(ErrorKind::IndexOutOfRange, "measure grid must start at t = 0");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw Error(ErrorKind::IndexOutOfRange, "measure grid is not strictly increasing", i);
}

Real eval_power_series(const std::vector<Real>& coeffs, const Real& t) {
  const long bits = Real::default_precision();
  Real sum(0);
  {
    PrecisionScope guard(bits + kGuardBits);
    sum = Real(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) sum = sum * t + coeffs[i];
  }
  sum.round_to(bits);
  return sum;
}

std::vector<Real> default_measure_grid(const Real& t_end, std::size_t intervals) {
  intervals = std::max<std::size_t>(intervals, 16);
  intervals = (intervals + 3) / 4 * 4;
  const std::size_t geometric = intervals / 16;
  const std::size_t linear = intervals - geometric;
  const Real knee = min(Real(1) / Real(2), t_end / Real(4));
  const Real first = knee * Real(1e-6);

  std::vector<Real> grid;
  grid.reserve(intervals + 1);
  grid.emplace_back(0);
  // first * r^(i-1), i = 1..geometric, ending at knee
  const Real ratio = pow(knee / first, Real(1) / Real(geometric - 1));
  Real t = first;
  for (std::size_t i = 1; i < geometric; ++i) {
    grid.push_back(t);
    t *= ratio;
  }
  grid.push_back(knee);
  const Real step = (t_end - knee) / Real(linear);
  for (std::size_t i = 1; i <= linear; ++i) grid.push_back(i == linear ? t_end : knee + step * Real(i));
  return grid;
}

GridMeasure sigma_j(const AMSeries& p, std::size_t j, const std::vector<Real>& grid) {
  const std::size_t N = p.truncation_order();
  if (j + 1 > N) throw Error(ErrorKind::OrderExceedsTruncation, "sigma_j needs j <= N - 1", j);
  // cdf = t^j p^(j)(t) = sum_m a_m m!/(m-j)! t^m
  std::vector<Real> cdf_c(N + 1, Real(0));
  for (std::size_t m = j; m <= N; ++m) {
    Real f(1);
    for (std::size_t i = m - j + 1; i <= m; ++i) f *= Real(i);
    cdf_c[m] = p.coeff(m) * f;
  }
  GridMeasure out;
  out.grid = grid;
  out.atom0 = cdf_c[0];
  out.cdf_series = cdf_c;
  out.density_series = series_derivative(cdf_c);
  out.density = sample(*out.density_series, grid);
  out.cdf = sample(cdf_c, grid);
  out.label = "sigma_" + std::to_string(j);
  out.validate();
  return out;
}

GridMeasure mu_step(const GridMeasure& prev, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::IndexOutOfRange, "mu_step needs k >= 1");
  prev.validate();
  const Real km1(k - 1);
  GridMeasure out;
  out.grid = prev.grid;
  out.atom0 = Real(0);
  out.density.reserve(prev.size());
  {
    const long bits = Real::default_precision();
    for (std::size_t i = 0; i < prev.size(); ++i) {
      Real d;
      {
        PrecisionScope guard(bits + kGuardBits);
        d = prev.grid[i] * prev.density[i] - km1 * prev.cdf[i];
      }
      d.round_to(bits);
      out.density.push_back(std::move(d));
    }
  }
  if (prev.cdf_series) {
    // cdf_new = t cdf_prev - k int_0^t cdf_prev
    const auto& c = *prev.cdf_series;
    std::vector<Real> nc(c.size() + 1, Real(0));
    for (std::size_t m = 1; m < nc.size(); ++m) nc[m] = c[m - 1] * (Real(1) - Real(k) / Real(m));
    out.cdf = sample(nc, out.grid);
    out.density_series = series_derivative(nc);
    out.cdf_series = std::move(nc);
  } else {
    out.cdf = trapezoid_cdf(out.atom0, out.grid, out.density);
  }
  out.label = "mu_step(" + prev.label + ", " + std::to_string(k) + ")";
  return out;
}

GridMeasure hand_built_measure(const Real& atom0, std::vector<Real> grid, std::vector<Real> density) {
  GridMeasure out;
  out.atom0 = atom0;
  out.grid = std::move(grid);
  out.density = std::move(density);
  if (out.density.size() != out.grid.size())
    throw Error(ErrorKind::IndexOutOfRange, "grid and density lengths differ");
  out.cdf = trapezoid_cdf(out.atom0, out.grid, out.density);
  out.label = "hand_built";
  out.validate();
  return out;
}

std::vector<GridMeasure> measure_chain(const AMSeries& p, std::size_t k, const std::vector<Real>& grid) {
  if (k == 0) throw Error(ErrorKind::IndexOutOfRange, "measure_chain needs k >= 1");
  std::vector<GridMeasure> chain;
  for (std::size_t j = 0; j < k; ++j) chain.push_back(sigma_j(p, j, grid));
  chain.push_back(mu_step(chain.back(), k));
  chain.back().label = "sigma_" + std::to_string(k);
  return chain;
}

Verdict positivity_check(const GridMeasure& m, const Real& tol) {
  Real scale(0);
  Real lowest(0);
  for (const auto& d : m.density) {
    scale = max(scale, abs(d));
    lowest = min(lowest, d);
  }
  if (scale.is_zero()) scale = Real(1);
  if (m.atom0 < -tol) return Verdict::fail;
  return lowest >= -tol * scale ? Verdict::pass : Verdict::fail;
}

MeasureTransform laplace_of_measure(const GridMeasure& m, const Real& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::IndexOutOfRange, "laplace_of_measure requires x > 0");
  m.validate();
  const long bits = Real::default_precision();
  const std::size_t M = m.size() - 1;
  MeasureTransform out;

  Real value(0), err(0), mass(0);
  {
    PrecisionScope guard(bits + kGuardBits);
    // the accumulators were created at working precision
    value = Real(0);
    err = Real(0);
    mass = Real(0);
    std::vector<Real> g;
    g.reserve(m.size());
    for (std::size_t i = 0; i <= M; ++i) g.push_back(exp(-x * m.grid[i]) * m.density[i]);
    const auto& t = m.grid;
    std::size_t i = 0;
    // Groups of four intervals: two Simpson panels against one on nodes i, i+2, i+4.
    for (; i + 4 <= M; i += 4) {
      const Real fine = simpson3(t[i], t[i + 1], t[i + 2], g[i], g[i + 1], g[i + 2]) +
                        simpson3(t[i + 2], t[i + 3], t[i + 4], g[i + 2], g[i + 3], g[i + 4]);
      const Real coarse = simpson3(t[i], t[i + 2], t[i + 4], g[i], g[i + 2], g[i + 4]);
      // Richardson step (Boole's rule on equal spacing); the raw difference stays as the bound.
      value += fine + (fine - coarse) / Real(15);
      err += abs(fine - coarse);
    }
    for (; i + 2 <= M; i += 2) {
      const Real s = simpson3(t[i], t[i + 1], t[i + 2], g[i], g[i + 1], g[i + 2]);
      const Real trap = (t[i + 2] - t[i]) * (g[i] + g[i + 2]) / Real(2);
      value += s;
      err += abs(s - trap);
    }
    if (i < M) {
      const Real h = t[M] - t[i];
      value += h * (g[i] + g[M]) / Real(2);
      err += h * abs(g[M] - g[i]);
    }
    for (const auto& v : g) mass += abs(v);
  }
  value.round_to(bits);
  err.round_to(bits);

  out.grid_truncated = !m.density.back().is_zero();
  if (out.grid_truncated) {
    if (m.density_series) {
      // int_T^inf e^(-xt) t^n dt = Gamma(n+1, xT) / x^(n+1)
      const Real T = m.grid.back();
      Real tail(0);
      const auto& b = *m.density_series;
      for (std::size_t n = 0; n < b.size(); ++n) {
        if (b[n].is_zero()) continue;
        tail += abs(b[n]) * gamma_upper(Real(n + 1), x * T) / pow(x, static_cast<long>(n + 1));
      }
      out.tail_bound = tail;
    } else {
      out.tail_bound = Real::infinity();
    }
  }

  out.result.value = m.atom0 + value;
  out.result.abs_error_bound = err + out.tail_bound + (abs(m.atom0) + mass) * Real(8) * Real::unit_roundoff(bits);
  return out;
}

std::string measure_csv(const GridMeasure& m, const std::vector<std::pair<std::string, std::vector<Real>>>& extra) {
  std::ostringstream os;
  os << "t,density,cdf";
  for (const auto& [name, col] : extra) {
    if (col.size() != m.size()) throw Error(ErrorKind::IndexOutOfRange, "extra column '" + name + "' has wrong length");
    os << ',' << name;
  }
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << m.grid[i].str() << ',' << m.density[i].str() << ',' << m.cdf[i].str();
    for (const auto& [name, col] : extra) os << ',' << col[i].str();
    os << '\n';
  }
  return os.str();
}

} // namespace amlt
