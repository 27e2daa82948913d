#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/laplace_image.hpp"
#include "amlt/quad_engine.hpp"
#include "amlt/widder_ops.hpp"

using namespace amlt;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Real(0.5), 3) == Real(15) / Real(8));
  CHECK(pochhammer(Real(7), 0) == Real(1));
  CHECK(pochhammer(Real(1), 5) == Real(120));
}

TEST_CASE("1F2 coefficients") {
  const AMSeries h = phi_1f2(HyperParams{Real(1), Real(1), Real(1), std::nullopt});
  const AMSeries ref = h_series();
  for (std::size_t n = 0; n <= 20; ++n) CHECK(h.coeff(n) == ref.coeff(n));
  // a = b, c = alpha + 1: 1/((alpha+1)_k k!)
  const AMSeries bessel = phi_1f2(HyperParams{Real(2), Real(2), Real(3), std::nullopt});
  CHECK(abs(bessel.coeff(2) - Real(1) / (Real(12) * Real(2))) < Real(1e-70));
  // a = 1, b = 2, c = 3: k! / ((k+1)! (k+2)!/2 k!) = 2 / ((k+1)! (k+2)!)
  const AMSeries s = phi_1f2(HyperParams{Real(1), Real(2), Real(3), std::nullopt});
  CHECK(abs(s.coeff(2) - Real(2) / (Real(6) * Real(24))) < Real(1e-70));
  CHECK(s.certificate() == TypeCertificate::certified_zero);
  CHECK_THROWS_AS(phi_1f2(HyperParams{Real(0), Real(1), Real(1), std::nullopt}), Error);
}

TEST_CASE("2F2 image values") {
  CHECK(f_2f2(HyperParams{Real(1), Real(1), Real(1), std::nullopt}, Real(1)).contains(exp(Real(1))));
  // a = b, c = 1 is H for any a
  CHECK(f_2f2(HyperParams{Real(2.5), Real(2.5), Real(1), std::nullopt}, Real(1)).contains(exp(Real(1))));
  // a = b = c = 1 is also H, not the geometric series 1/(x - 1)
  CHECK(f_2f2(HyperParams{Real(1), Real(1), Real(1), std::nullopt}, Real(3)).contains(exp(Real(1) / Real(3)) / Real(3)));
  const EvalResult r = f_2f2(HyperParams{Real(1), Real(2), Real(3), std::nullopt}, Real(2));
  const Real oracle = Real::parse("0.545417758242659470067884536820498718014388302705355354655144");
  CHECK(abs(r.value - oracle) < Real(1e-59));
  // (2)_n / (n!)^2 x^-n-1 at x = 3 sums to (4/9) e^(1/3)
  const EvalResult two = f_2f2(HyperParams{Real(2), Real(1), Real(1), std::nullopt}, Real(3));
  CHECK(abs(two.value - Real(4) / Real(9) * exp(Real(1) / Real(3))) < Real(1e-60));
  // 1/x asymptotics
  const Real big(1e6);
  const EvalResult far = f_2f2(HyperParams{Real(0.5), Real(2), Real(3), std::nullopt}, big);
  CHECK(abs(far.value - Real(1) / big) < Real(2) / (big * big));
}

TEST_CASE("weighted 2F2 against quadrature") {
  {
    HyperParams p{Real(1), Real(2), Real(3), Real(1)};
    CHECK(abs(f_2f2_weighted(p, Real(2)).value - f_2f2(p, Real(2)).value) < Real(1e-70));
  }
  {
    HyperParams p{Real(1), Real(1), Real(1), Real(0.5)};
    const EvalResult closed = f_2f2_weighted(p, Real(2));
    CHECK(abs(closed.value - Real::parse("1.6345307138119069802317997199635")) < Real(1e-30));
    const EvalResult quad = laplace_weighted_numeric(phi_1f2(p), Real(0.5), Real(2));
    CHECK(abs(closed.value - quad.value) <= closed.abs_error_bound + quad.abs_error_bound);
  }
  {
    HyperParams p{Real(1), Real(2), Real(2), Real(2)};
    const EvalResult closed = f_2f2_weighted(p, Real(3));
    const Real oracle = Real::parse("0.131870808362029842876041773200862279199302171733135660872506");
    CHECK(abs(closed.value - oracle) < Real(1e-59));
    const EvalResult quad = laplace_weighted_numeric(phi_1f2(p), Real(2), Real(3));
    CHECK(abs(closed.value - quad.value) <= closed.abs_error_bound + quad.abs_error_bound);
  }
  {
    HyperParams p{Real(1), Real(2), Real(3), Real(1.5)};
    const Real oracle = Real::parse("0.356960016139821423543250427584652231075413801638962917622571");
    CHECK(abs(f_2f2_weighted(p, Real(2)).value - oracle) < Real(1e-59));
  }
}

TEST_CASE("H closed form and series image agree") {
  const ClosedForm c = h_closed_form();
  const InvPowerSeries s = laplace_coeffs(h_series());
  for (const Real x : {Real(0.75), Real(1), Real(5)}) CHECK(eval_image(s, x).contains(c.eval(x).value));
}

TEST_CASE("c_lambda") {
  CHECK(abs(c_lambda(Real(0.5)) + Real(0.25)) < Real(1e-70));
  CHECK(abs(c_lambda(Real(2.5)) + Real(0.9375)) < Real(1e-70));
  CHECK(abs(c_lambda(Real::parse("0.3")) + Real::parse("0.21")) < Real(1e-70));
  CHECK(abs(c_lambda(Real::parse("1.7")) + Real::parse("0.357")) < Real(1e-70));
}

TEST_CASE("scaled family failure order") {
  const InvPowerSeries inv_x(std::vector<Real>{Real(1)});
  const ScaledFamily f = scaled_family(inv_x, Real(0.5));
  CHECK_FALSE(f.integer);
  REQUIRE(f.failure_order.has_value());
  CHECK(*f.failure_order == 2);
  CHECK(f.leading_coefficient == Real(-0.25));
  CHECK(widder_image(f.series, 2).coeff(0) == Real(-0.25));

  const ScaledFamily h = scaled_family(laplace_coeffs(h_series()), Real(1.5));
  REQUIRE(h.failure_order.has_value());
  CHECK(*h.failure_order == 3);
  CHECK(widder_image(h.series, 3).coeff(0).sign() < 0);
  CHECK(widder_image(h.series, 2).coeff(0).sign() > 0);

  const ScaledFamily three = scaled_family(laplace_coeffs(h_series()), Real(3));
  CHECK(three.integer);
  CHECK_FALSE(three.failure_order.has_value());
  CheckOptions o;
  o.k_max = 4;
  CHECK(check_conditions(Function(three.series), o).summary == Verdict::pass);

  CHECK_THROWS_AS(scaled_family(inv_x, Real(0)), Error);
  CHECK_THROWS_AS(scaled_family(InvPowerSeries(std::vector<Real>{Real(1)}, Real(1)), Real(0.5)), Error);
}
