#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/laplace_image.hpp"
#include "amlt/quad_engine.hpp"

using namespace amlt;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  const GaussRule& g = gauss_legendre(20);
  REQUIRE(g.nodes.size() == 20);
  Real w(0), x38(0);
  for (std::size_t i = 0; i < 20; ++i) {
    w += g.weights[i];
    x38 += g.weights[i] * pow(g.nodes[i], 38L);
  }
  CHECK(abs(w - Real(2)) < Real(1e-70));
  CHECK(abs(x38 - Real(2) / Real(39)) < Real(1e-70));
}

TEST_CASE("adaptive integration") {
  const EvalResult r = integrate_adaptive([](const Real& t) { return exp(-t); }, Real(0), Real(5), Real(1e-40));
  CHECK(abs(r.value - (Real(1) - exp(Real(-5)))) < Real(1e-40));
  CHECK(r.abs_error_bound < Real(1e-40));
  // t^(3/2) is not smooth at 0; bisection refines toward it
  const EvalResult s = integrate_adaptive([](const Real& t) { return t * sqrt(t); }, Real(0), Real(1), Real(1e-30));
  CHECK(abs(s.value - Real(2) / Real(5)) < Real(1e-29));
  CHECK_THROWS_AS(integrate_adaptive([](const Real& t) { return Real(1) / sqrt(t); }, Real(0), Real(1), Real(1e-30)), Error);
}

TEST_CASE("laplace_numeric examples") {
  const EvalResult h1 = laplace_numeric(h_series(), Real(1));
  CHECK(abs(h1.value - exp(Real(1))) < Real(1e-24));
  CHECK(laplace_numeric(AMSeries({Real(0)}), Real(3)).value.is_zero());
  const EvalResult t = laplace_numeric(AMSeries({Real(0), Real(1)}), Real(2));
  CHECK(abs(t.value - Real(0.25)) < Real(1e-25));
  // agrees with the image series
  const EvalResult image = eval_image(laplace_coeffs(h_series()), Real(2.5));
  const EvalResult quad = laplace_numeric(h_series(), Real(2.5));
  CHECK(abs(image.value - quad.value) <= image.abs_error_bound + quad.abs_error_bound);
}

TEST_CASE("laplace_numeric refuses uncertified series") {
  std::vector<Real> c;
  Real f(1);
  for (std::size_t n = 0; n <= kDefaultTruncation; ++n) {
    if (n > 0) f *= Real(n);
    c.push_back(Real(1) / f);
  }
  CHECK_THROWS_AS(laplace_numeric(AMSeries(c), Real(3)), Error);
}

TEST_CASE("weighted transforms") {
  const AMSeries one({Real(1)});
  const EvalResult r = laplace_weighted_numeric(one, Real(0.5), Real(4));
  CHECK(abs(r.value - sqrt(Real::pi()) / Real(2)) < Real(1e-25));

  const AMSeries h = h_series();
  const EvalResult w1 = laplace_weighted_numeric(h, Real(1), Real(2));
  const EvalResult l = laplace_numeric(h, Real(2));
  CHECK(abs(w1.value - l.value) < Real(1e-25));

  // 1F2(1; 2, 3), lambda = 3/2, x = 2 (60-digit oracle)
  HyperParams p{Real(1), Real(2), Real(3), Real(1.5)};
  const EvalResult q = laplace_weighted_numeric(phi_1f2(p), Real(1.5), Real(2));
  const Real oracle = Real::parse("0.356960016139821423543250427584652231075413801638962917622571");
  CHECK(abs(q.value - oracle) < Real(1e-25));
  CHECK(q.contains(oracle));

  // h, lambda = 1/2, x = 2
  const EvalResult hh = laplace_weighted_numeric(h, Real(0.5), Real(2));
  CHECK(abs(hh.value - Real::parse("1.6345307138119069802317997199635")) < Real(1e-25));
}
