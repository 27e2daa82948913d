#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/laplace_image.hpp"
#include "amlt/measure_chain.hpp"
#include "amlt/widder_ops.hpp"

using namespace amlt;

namespace {
AMSeries exp_series() {
  std::vector<Real> c;
  Real f(1);
  for (std::size_t n = 0; n <= kDefaultTruncation; ++n) {
    if (n > 0) f *= Real(n);
    c.push_back(Real(1) / f);
  }
  return AMSeries(c);
}
const std::vector<Real>& small_grid() {
  static const std::vector<Real> g = default_measure_grid(Real(10), 256);
  return g;
}
} // namespace

TEST_CASE("default grid shape") {
  const auto g = default_measure_grid();
  CHECK(g.size() == kDefaultMeasureIntervals + 1);
  CHECK(g.front().is_zero());
  CHECK(g.back() == Real(kDefaultMeasureEnd));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK((default_measure_grid(Real(10), 30).size() - 1) % 4 == 0);
}

TEST_CASE("sigma_j examples") {
  const auto& g = small_grid();
  const GridMeasure s0 = sigma_j(exp_series(), 0, g);
  CHECK(s0.atom0 == Real(1));
  for (std::size_t i = 0; i < g.size(); i += 37) CHECK(abs(s0.density[i] - exp(g[i])) <= Real(1e-20) * exp(g[i]));

  const GridMeasure s1 = sigma_j(AMSeries({Real(0), Real(0), Real(1)}), 1, g);
  CHECK(s1.atom0.is_zero());
  for (std::size_t i = 0; i < g.size(); i += 37) {
    CHECK(s1.cdf[i] == Real(2) * g[i] * g[i]);
    CHECK(s1.density[i] == Real(4) * g[i]);
  }

  const GridMeasure sh = sigma_j(h_series(), 0, g);
  CHECK(sh.atom0 == Real(1));
  CHECK(positivity_check(sh) == Verdict::pass);
  CHECK_THROWS_AS(sigma_j(h_series(), kDefaultTruncation, g), Error);
}

TEST_CASE("mu_step examples") {
  const auto& g = small_grid();
  const AMSeries e = exp_series();
  // sigma_1 of e^t, k = 2: density t^2 e^t (the truncated series differs from exp by ~t^64/64!)
  const GridMeasure m2 = mu_step(sigma_j(e, 1, g), 2);
  for (std::size_t i = 0; i < g.size(); i += 29) {
    const Real expect = g[i] * g[i] * exp(g[i]);
    CHECK(abs(m2.density[i] - expect) <= Real(1e-20) * (Real(1) + expect));
  }
  // p = 1, k = 1: zero measure
  const GridMeasure z = mu_step(sigma_j(AMSeries({Real(1)}), 0, g), 1);
  for (const auto& d : z.density) CHECK(d.is_zero());
  CHECK(laplace_of_measure(z, Real(2)).result.value.is_zero());
  // sigma_0 of e^t, k = 1: density t e^t
  const GridMeasure m1 = mu_step(sigma_j(e, 0, g), 1);
  CHECK(abs(m1.density[100] - g[100] * exp(g[100])) <= Real(1e-20) * exp(g[100]) * g[100]);
  CHECK_THROWS_AS(mu_step(z, 0), Error);
}

TEST_CASE("chain step equals the next sigma") {
  const auto& g = small_grid();
  const AMSeries p = phi_1f2(HyperParams{Real(1), Real(2), Real(3), std::nullopt});
  for (std::size_t j = 0; j < 4; ++j) {
    const GridMeasure step = mu_step(sigma_j(p, j, g), j + 1);
    // density t^(j+1) p^(j+1)
    const AMSeries d = derivative_series(p, j + 1);
    for (std::size_t i = 0; i < g.size(); i += 31) {
      const Real expect = pow(g[i], static_cast<long>(j + 1)) * eval_phi(d, g[i]).value;
      CHECK(abs(step.density[i] - expect) <= Real(1e-55) * (Real(1) + abs(expect)));
    }
    CHECK(positivity_check(step) == Verdict::pass);
  }
  const auto chain = measure_chain(p, 3, g);
  CHECK(chain.size() == 4);
  CHECK(chain.back().label == "sigma_3");
}

TEST_CASE("positivity failure on a hand-built measure") {
  std::vector<Real> grid{Real(0), Real(1), Real(2), Real(3), Real(4)};
  std::vector<Real> dens{Real(1), Real(1), Real(1), Real(-1), Real(1)};
  const GridMeasure m = hand_built_measure(Real(0), grid, dens);
  CHECK(positivity_check(m) == Verdict::fail);
  CHECK(positivity_check(hand_built_measure(Real(-1), grid, std::vector<Real>(5, Real(1)))) == Verdict::fail);
  CHECK(positivity_check(hand_built_measure(Real(0), grid, std::vector<Real>(5, Real(1)))) == Verdict::pass);
  CHECK_THROWS_AS(hand_built_measure(Real(0), {Real(1), Real(2)}, {Real(1), Real(1)}), Error);
  CHECK_THROWS_AS(hand_built_measure(Real(0), grid, {Real(1)}), Error);
}

TEST_CASE("Laplace transforms of measures") {
  // sigma_0 of p = 1 is the unit atom
  const MeasureTransform one = laplace_of_measure(sigma_j(AMSeries({Real(1)}), 0, small_grid()), Real(2));
  CHECK(one.result.value == Real(1));

  // mu_2 of e^t at x = 3 is f_2(3) = 2/(x-1)^3 = 1/4
  const auto chain = measure_chain(exp_series(), 2);
  const MeasureTransform mt = laplace_of_measure(chain.back(), Real(3));
  CHECK(mt.grid_truncated);
  CHECK(mt.result.contains(Real(0.25)));
  CHECK(abs(mt.result.value - Real(0.25)) < Real(1e-6));

  // H chain: laplace of sigma_k equals H_k = x^-(k+1) e^(1/x)
  const auto hc = measure_chain(h_series(), 3);
  const Real x(2);
  for (std::size_t k = 1; k <= 3; ++k) {
    const MeasureTransform t = laplace_of_measure(mu_step(hc[k - 1], k), x);
    const Real expect = exp(Real(1) / x) / pow(x, static_cast<long>(k + 1));
    CHECK(t.result.contains(expect));
    CHECK(abs(t.result.value - expect) < Real(1e-6));
  }
  CHECK_THROWS_AS(laplace_of_measure(hc[0], Real(0)), Error);
}

TEST_CASE("csv layout") {
  std::vector<Real> grid{Real(0), Real(1)};
  const GridMeasure m = hand_built_measure(Real(0), grid, {Real(1), Real(1)});
  const std::string csv = measure_csv(m, {{"oracle", {Real(0), Real(1)}}});
  CHECK(csv.rfind("t,density,cdf,oracle\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK_THROWS_AS(measure_csv(m, {{"bad", {Real(0)}}}), Error);
}
