#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/laplace_image.hpp"

using namespace amlt;

TEST_CASE("coefficients c_k = a_k k!") {
  const InvPowerSeries h = laplace_coeffs(h_series());
  CHECK(h.coeff(0) == Real(1));
  CHECK(abs(h.coeff(3) - Real(1) / Real(6)) <= Real(2) * ulp(Real(1) / Real(6)));
  CHECK(h.offset().is_zero());
  CHECK(h.tail().known);
  CHECK_FALSE(h.finite());
  CHECK(laplace_coeffs(AMSeries({Real(1), Real(1)})).finite());
}

TEST_CASE("H image equals x^-1 exp(1/x)") {
  const InvPowerSeries h = laplace_coeffs(h_series());
  const EvalResult r = eval_image(h, Real(2));
  const Real oracle = Real::parse("0.824360635350064073424325393907");
  CHECK(abs(r.value - oracle) < Real(1e-29));
  CHECK(r.abs_error_bound < Real(1e-60));
  CHECK(r.sign_definite);
  // close to the radius the tail still has a finite bound
  const EvalResult near = eval_image(h, Real(0.25));
  CHECK(near.contains(Real(4) * exp(Real(4))));
}

TEST_CASE("divergence is reported") {
  // c_n = n! a_n with a_n = 1: the image series diverges for x < 1
  std::vector<Real> ones(kDefaultTruncation + 1, Real(1));
  try {
    (void)eval_image(laplace_coeffs(AMSeries(ones)), Real(0.5));
    FAIL("expected DivergentAt");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergentAt);
  }
}

TEST_CASE("remainder split reconstructs the image") {
  const InvPowerSeries h = laplace_coeffs(h_series());
  for (std::size_t n = 1; n <= 6; ++n) {
    const RemainderSplit s = split_remainder(h, n);
    CHECK(s.head.size() == n);
    CHECK(s.tail.coeff(0) == h.coeff(n));
    for (const Real x : {Real(0.5), Real(1), Real(3)}) {
      const EvalResult whole = eval_image(h, x);
      const EvalResult rebuilt = reconstruct(s, x);
      CHECK(abs(whole.value - rebuilt.value) <= Real(4) * ulp(whole.value) + whole.abs_error_bound + rebuilt.abs_error_bound);
      // the tail of a series with nonnegative coefficients stays nonnegative
      CHECK(eval_image(s.tail, x).value.sign() >= 0);
    }
  }
  // 1/x is finite: splitting past its length is allowed
  const InvPowerSeries inv_x(std::vector<Real>{Real(1)});
  const RemainderSplit far = split_remainder(inv_x, 5);
  CHECK(eval_image(far.tail, Real(2)).value.is_zero());
}

TEST_CASE("algebra on inverse power series") {
  const InvPowerSeries f(std::vector<Real>{Real(1), Real(2)});  // 1/x + 2/x^2
  const Real x(3);
  const EvalResult d = eval_image(f.derivative(1), x);
  CHECK(abs(d.value - (Real(-1) / Real(9) - Real(4) / Real(27))) < Real(1e-70));
  const EvalResult xf = eval_image(f.times_power(Real(1)), x);
  CHECK(abs(xf.value - (Real(1) + Real(2) / Real(3))) < Real(1e-70));
  CHECK(eval_image(f.scaled(Real(2)), x).value == Real(2) * eval_image(f, x).value);
}
