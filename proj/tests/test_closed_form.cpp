#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amlt/closed_form.hpp"
#include "amlt/error.hpp"
#include "amlt/function.hpp"
#include "amlt/hyper_gallery.hpp"

using namespace amlt;

TEST_CASE("parser accepts the usual spellings") {
  const Real x(2);
  CHECK(abs(ClosedForm::parse("1/(x+1)").eval(x).value - Real(1) / Real(3)) < Real(1e-70));
  CHECK(abs(ClosedForm::parse("x^-1*exp(1/x)").eval(x).value - exp(Real(0.5)) / Real(2)) < Real(1e-70));
  CHECK(abs(ClosedForm::parse("2/x^3 + 1/x").eval(x).value - Real(0.75)) < Real(1e-70));
  CHECK(abs(ClosedForm::parse("(x+1)^(-3/2)").eval(Real(3)).value - Real(1) / Real(8)) < Real(1e-70));
  CHECK(abs(ClosedForm::parse("x^(-1)").eval(x).value - Real(0.5)) < Real(1e-70));
}

TEST_CASE("parse errors carry the column") {
  try {
    (void)ClosedForm::parse("1/(x+1");
    FAIL("expected SpecParse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpecParse);
    CHECK(e.index() >= 1);
  }
  CHECK_THROWS_AS(ClosedForm::parse("sin(x)"), Error);
  CHECK_THROWS_AS(ClosedForm::parse(""), Error);
}

TEST_CASE("symbolic derivatives of H") {
  const ClosedForm h = h_closed_form();
  const Real x(3);
  // H'(x) = -(x + 1) x^-3 e^(1/x)
  const Real expect = -(x + Real(1)) / pow(x, 3L) * exp(Real(1) / x);
  CHECK(abs(h.derivative(1).eval(x).value - expect) < Real(1e-70));
  // derivative(m) composes
  CHECK(abs(h.derivative(3).eval(x).value - h.derivative(1).derivative(2).eval(x).value) < Real(1e-70));
}

TEST_CASE("function handle dispatches") {
  const Function cf(h_closed_form());
  const Function sf(laplace_coeffs(h_series()));
  const Real x(2);
  for (std::size_t m = 0; m <= 4; ++m) {
    const EvalResult a = cf.derivative(m, x);
    const EvalResult b = sf.derivative(m, x);
    CHECK(abs(a.value - b.value) <= a.abs_error_bound + b.abs_error_bound + Real(1e-60) * abs(a.value));
  }
  const Function plain = Function::from_callable([](const Real& t) { return Real(1) / t; }, "1/x");
  CHECK(plain.eval(Real(4)).value == Real(0.25));
  CHECK_FALSE(plain.differentiable());
  CHECK_THROWS_AS(plain.derivative(1, Real(1)), Error);
}
