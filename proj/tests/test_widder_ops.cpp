#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/widder_ops.hpp"

using namespace amlt;

namespace {
Function h_series_fn() { return Function(laplace_coeffs(h_series())); }
Function one_over(const Real& shift) { return Function(ClosedForm::shifted_power(shift, Real(-1))); }
} // namespace

TEST_CASE("widder image of 1/x vanishes from order 1") {
  const InvPowerSeries inv_x(std::vector<Real>{Real(1)});
  for (std::size_t j = 1; j <= 70; j += 17) {
    const InvPowerSeries w = widder_image(inv_x, j);
    CHECK(eval_image(w, Real(2)).value.is_zero());
  }
}

TEST_CASE("series, recursion step and recursion chain agree on H") {
  const Function f = h_series_fn();
  const Function cf(h_closed_form());
  for (std::size_t k = 1; k <= 5; ++k) {
    for (const Real x : {Real(0.5), Real(2), Real(10)}) {
      const EvalResult direct = widder_function(f, k).eval(x);
      const EvalResult step = recursion_step(widder_function(f, k - 1), k, x);
      const EvalResult chain = recursion_chain(cf, k, x);
      const Real slack = Real(1e-60) * abs(direct.value);
      CHECK(abs(direct.value - step.value) <= direct.abs_error_bound + step.abs_error_bound + slack);
      CHECK(abs(direct.value - chain.value) <= direct.abs_error_bound + chain.abs_error_bound + slack);
      // f_k = L(mu_k) with mu_k >= 0 for this AM series
      CHECK(direct.value.sign() >= 0);
    }
  }
}

TEST_CASE("Widder identity and its corollaries hold") {
  for (const Function& f : {h_series_fn(), Function(h_closed_form()), one_over(Real(1))}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const Real x(1.5);
      const PairResult p = widder_identity_check(f, k, x);
      CHECK(p.relative_difference() < Real(1e-40));
      for (std::size_t j = 0; j + 1 <= k; ++j) {
        const PairResult c = corollary_identity_check(f, j, k, x);
        CHECK(c.relative_difference() < Real(1e-40));
      }
      const PairResult step = step_derivative_check(f, k, x);
      CHECK(step.relative_difference() < Real(1e-40));
    }
  }
}

TEST_CASE("corollary coefficients are nonnegative integers") {
  for (std::size_t k = 1; k <= 8; ++k) {
    const CorollaryTable t = corollary_coeffs(k, k - 1);
    CHECK(t.nonnegative());
    CHECK(t.at(0, 0) == Real(1));
    for (const auto& row : t.rows)
      for (const auto& v : row) CHECK(v.is_integer());
  }
}

TEST_CASE("conditions pass for H and fail for 1/(x+1)") {
  CheckOptions o;
  o.k_max = 4;
  const CheckReport good = check_conditions(h_series_fn(), o);
  CHECK(good.summary == Verdict::pass);

  const CheckReport bad = check_conditions(one_over(Real(1)), o);
  CHECK(bad.summary == Verdict::fail);
  bool v1 = false;
  for (const auto& e : bad.entries)
    if (e.condition_id == "thm1.1.v" && e.k == 1 && e.verdict == Verdict::fail) v1 = true;
  CHECK(v1);
}

TEST_CASE("completely monotone order and polynomial detection") {
  // L(1 + t) = 1/x + 1/x^2: order 1, polynomial of degree 1
  const Function f(InvPowerSeries(std::vector<Real>{Real(1), Real(1)}));
  CHECK_THROWS_AS(cm_order_detect(f, 1), Error);
  CHECK(cm_order_detect(f, 2).verdict == Verdict::fail);
  const PolynomialDetection pd = detect_polynomial(f);
  REQUIRE(pd.r.has_value());
  CHECK(*pd.r == 2);
  CHECK(abs(pd.a_r - Real(1)) < Real(1e-20));
  // 1/x^2 satisfies order 2 exactly
  const Function g(InvPowerSeries(std::vector<Real>{Real(0), Real(1)}));
  CHECK(cm_order_detect(g, 2).verdict == Verdict::pass);
  CHECK(cm_order_detect(g, 3).verdict == Verdict::fail);
}

TEST_CASE("identity report flags nothing on exact input") {
  const CheckReport r = identity_report(Function(h_closed_form()), 3, {Real(0.5), Real(4)});
  CHECK(r.summary == Verdict::pass);
  CHECK_FALSE(r.entries.empty());
}

TEST_CASE("H_k = x^-(k+1) exp(1/x)") {
  const InvPowerSeries h = laplace_coeffs(h_series());
  for (std::size_t k = 1; k <= 4; ++k) {
    const EvalResult r = eval_image(widder_image(h, k), Real(2));
    const Real expect = exp(Real(0.5)) / pow(Real(2), static_cast<long>(k + 1));
    CHECK(r.contains(expect));
  }
  // -x H' - H at 1 is e; -(x x^-2)' at 2 is 1/4
  CHECK(abs(recursion_step(Function(h_closed_form()), 1, Real(1)).value - exp(Real(1))) < Real(1e-70));
  const Function inv_sq(InvPowerSeries(std::vector<Real>{Real(0), Real(1)}));
  CHECK(abs(recursion_step(inv_sq, 1, Real(2)).value - Real(0.25)) < Real(1e-70));
}

TEST_CASE("offset series: first negative image coefficient") {
  const InvPowerSeries s(std::vector<Real>{Real(1)}, Real(0.5));
  CHECK(widder_image(s, 2).coeff(0) == Real(-0.25));
}

TEST_CASE("derivative recursion on H at x = 1") {
  const PairResult p = derivative_recursion_check(Function(h_closed_form()), 1, 2, Real(1));
  CHECK(abs(p.left.value + Real(3) * exp(Real(1))) < Real(1e-70));
  CHECK(p.agree());
}

TEST_CASE("Sokal-type operator on pure powers") {
  const Real lambda(1.5);
  const Function f(ClosedForm::shifted_power(Real(0), -lambda));
  const Real x(2);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) CHECK(abs(sokal_T(f, n, k, lambda, x).value) < Real(1e-70));
    const Real expect = pochhammer(lambda, n) * pow(x, -lambda - Real(n));
    CHECK(abs(sokal_T(f, n, 0, lambda, x).value - expect) < Real(1e-70));
  }
  const Function h(h_closed_form());
  CHECK(sokal_T(h, 0, 0, Real(1), x).value == h.eval(x).value);
}

TEST_CASE("corollary coefficient table entries") {
  const CorollaryTable t = corollary_coeffs(3, 2);
  CHECK(t.at(1, 0) == Real(2));
  CHECK(t.at(1, 1) == Real(1));
  CHECK(corollary_identity_check(Function(h_closed_form()), 2, 3, Real(1)).agree());
}

TEST_CASE("cm order examples") {
  const Function two_cubed(InvPowerSeries(std::vector<Real>{Real(0), Real(0), Real(2)}));
  const CmOrderResult r = cm_order_detect(two_cubed, 3);
  CHECK(r.verdict == Verdict::pass);
  REQUIRE(r.zero_prefix.has_value());
  CHECK(*r.zero_prefix);
  CHECK(cm_order_detect(Function(h_closed_form()), 2).verdict == Verdict::fail);
}

TEST_CASE("polynomial detection examples") {
  const PolynomialDetection a = detect_polynomial(Function(InvPowerSeries(std::vector<Real>{Real(1), Real(0), Real(3)})));
  REQUIRE(a.r.has_value());
  CHECK(*a.r == 3);
  CHECK(abs(a.a_r - Real(3)) < Real(1e-20));
  const PolynomialDetection c = detect_polynomial(Function(InvPowerSeries(std::vector<Real>{Real(5)})));
  REQUIRE(c.r.has_value());
  CHECK(*c.r == 1);
  CHECK_FALSE(detect_polynomial(Function(laplace_coeffs(h_series()))).r.has_value());
}

TEST_CASE("decay toward infinity") {
  DecayOptions o;
  const CheckReport inv = decay_check(Function(InvPowerSeries(std::vector<Real>{Real(1)})), 0, o);
  CHECK(inv.summary == Verdict::pass);
  const CheckReport h1 = decay_check(Function(h_closed_form()), 1, o);
  CHECK(h1.summary == Verdict::pass);
}

TEST_CASE("zero function passes every condition") {
  CheckOptions o;
  o.k_max = 3;
  CHECK(check_conditions(Function(InvPowerSeries(std::vector<Real>{Real(0)})), o).summary == Verdict::pass);
}

TEST_CASE("Sokal operator at n = 0, lambda = 1 is the Widder image up to (-1)^k") {
  const InvPowerSeries h = laplace_coeffs(h_series());
  const Function f(h);
  const Real x(1.5);
  for (std::size_t k = 0; k <= 6; ++k) {
    const EvalResult t = sokal_T(f, 0, k, Real(1), x);
    const EvalResult w = eval_image(widder_image(h, k), x);
    const Real signed_w = k % 2 == 0 ? w.value : -w.value;
    CHECK(abs(t.value - signed_w) <= t.abs_error_bound + w.abs_error_bound);
  }
}
