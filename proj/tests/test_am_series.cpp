#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amlt/am_series.hpp"
#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"

using namespace amlt;

namespace {
std::vector<Real> exp_coeffs() {
  std::vector<Real> c;
  Real f(1);
  for (std::size_t n = 0; n <= kDefaultTruncation; ++n) {
    if (n > 0) f *= Real(n);
    c.push_back(Real(1) / f);
  }
  return c;
}
} // namespace

TEST_CASE("construction pads, validates and clamps") {
  AMSeries s({Real(1), Real(2)});
  CHECK(s.truncation_order() == kDefaultTruncation);
  CHECK(s.coeff(1) == Real(2));
  CHECK(s.coeff(5).is_zero());

  try {
    AMSeries bad({Real(1), Real(-1)});
    FAIL("expected NegativeCoefficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeCoefficient);
    CHECK(e.index() == 1);
  }

  AMSeries noisy({Real(1), -amlt::ldexp(Real(1), -300)});
  CHECK(noisy.coeff(1).is_zero());
  CHECK(noisy.clamped_indices() == std::vector<std::size_t>{1});
}

TEST_CASE("type certificates") {
  CHECK(AMSeries({Real(0)}).certificate() == TypeCertificate::certified_zero);
  CHECK(AMSeries({Real(1), Real(3), Real(5)}).type().polynomial);
  CHECK(h_series().certificate() == TypeCertificate::certified_zero);
  const AMSeries e(exp_coeffs());
  CHECK(e.certificate() == TypeCertificate::violated);
  CHECK_FALSE(e.type_zero());
  // r_n = 1 for e^t
  CHECK(amlt::abs(e.type().rates[40] - Real(1)) <= Real(1e-60));
}

TEST_CASE("phi evaluation") {
  const AMSeries h = h_series();
  // h(0) = 1, h(1) = I_0(2)
  CHECK(eval_phi(h, Real(0)).value == Real(1));
  const EvalResult r = eval_phi(h, Real(1));
  CHECK(amlt::abs(r.value - Real::parse("2.27958530233606726743720444081153335328584110278545905407084")) <= Real(1e-58));
  CHECK(r.abs_error_bound < Real(1e-70));
  CHECK(r.sign_definite);
  // violated certificate: value of the stored part, no finite bound
  CHECK(eval_phi(AMSeries(exp_coeffs()), Real(1)).abs_error_bound.is_inf());
}

TEST_CASE("derivative series and gamma weights") {
  const AMSeries p({Real(0), Real(0), Real(1)});  // t^2
  const AMSeries d = derivative_series(p, 1);
  CHECK(d.coeff(1) == Real(2));
  CHECK(d.truncation_order() == kDefaultTruncation - 1);
  CHECK_THROWS_AS(derivative_series(p, kDefaultTruncation + 1), Error);

  const AMSeries h = h_series();
  const AMSeries w1 = weight_gamma(h, Real(1));
  for (std::size_t n = 0; n <= 10; ++n) CHECK(w1.coeff(n) == h.coeff(n));
  const AMSeries wh = weight_gamma(AMSeries({Real(1), Real(1)}), Real(0.5));
  CHECK(amlt::abs(wh.coeff(0) - sqrt(Real::pi())) <= Real(1e-70));
  CHECK(amlt::abs(wh.coeff(1) - sqrt(Real::pi()) / Real(2)) <= Real(1e-70));
  CHECK_THROWS_AS(weight_gamma(h, Real(0)), Error);
}
