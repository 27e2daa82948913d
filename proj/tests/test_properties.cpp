#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Invariants checked over seeded random certified series.

#include "amlt/hyper_gallery.hpp"
#include "amlt/laplace_image.hpp"
#include "amlt/measure_chain.hpp"
#include "amlt/quad_engine.hpp"
#include "amlt/random_series.hpp"
#include "amlt/widder_ops.hpp"

using namespace amlt;

namespace {
const std::vector<AMSeries>& sample() {
  static const std::vector<AMSeries> s = random_certified_series(7, 6);
  return s;
}
} // namespace

TEST_CASE("random series are deterministic and certified") {
  const auto again = random_certified_series(7, 6);
  REQUIRE(again.size() == sample().size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].name() == sample()[i].name());
    CHECK(again[i].coeffs() == sample()[i].coeffs());
    CHECK(again[i].certificate() == TypeCertificate::certified_zero);
    for (const auto& c : again[i].coeffs()) CHECK(c.sign() >= 0);
  }
  CHECK(random_certified_series(8, 1)[0].coeffs() != sample()[0].coeffs());
}

TEST_CASE("image series against quadrature") {
  for (const auto& s : sample()) {
    const InvPowerSeries ips = laplace_coeffs(s);
    for (const Real x : {Real(1), Real(4)}) {
      const EvalResult a = eval_image(ips, x);
      const EvalResult b = laplace_numeric(s, x);
      CAPTURE(s.name());
      CHECK(agree(a, b));
    }
  }
}

TEST_CASE("Widder images of absolutely monotonic input stay completely monotone") {
  for (const auto& s : sample()) {
    const InvPowerSeries ips = laplace_coeffs(s);
    for (std::size_t k = 0; k <= 4; ++k) {
      const InvPowerSeries w = widder_image(ips, k);
      for (std::size_t n = 0; n <= 20; ++n) CHECK(w.coeff(n).sign() >= 0);
      const Function fk = widder_function(Function(ips), k);
      for (const Real x : {Real(0.7), Real(3)}) {
        // sign alternation of the first derivatives
        for (std::size_t m = 0; m <= 3; ++m) {
          const EvalResult d = fk.derivative(m, x);
          CHECK(d.value.sign() * (m % 2 == 0 ? 1 : -1) >= 0);
        }
      }
    }
  }
}

TEST_CASE("dual paths: identity checks on random series") {
  for (const auto& s : sample()) {
    const Function f(laplace_coeffs(s));
    CAPTURE(s.name());
    CHECK(corollary_identity_check(f, 2, 3, Real(1.5)).relative_difference() < Real(1e-40));
    CHECK(widder_identity_check(f, 3, Real(0.7)).relative_difference() < Real(1e-40));
    for (std::size_t k = 1; k <= 3; ++k) {
      const EvalResult a = widder_function(f, k).eval(Real(2));
      const EvalResult b = recursion_chain(f, k, Real(2));
      CHECK(relative_difference(a.value, b.value) < Real(1e-40));
    }
  }
}

TEST_CASE("remainder reconstruction and tail sign") {
  for (const auto& s : sample()) {
    const InvPowerSeries ips = laplace_coeffs(s);
    for (std::size_t n = 1; n <= 5; ++n) {
      const RemainderSplit sp = split_remainder(ips, n);
      const Real x(2);
      const EvalResult whole = eval_image(ips, x);
      const EvalResult rebuilt = reconstruct(sp, x);
      CHECK(abs(whole.value - rebuilt.value) <= Real(4) * ulp(whole.value) + whole.abs_error_bound + rebuilt.abs_error_bound);
      CHECK(eval_image(sp.tail, x).value.sign() >= 0);
    }
  }
}

TEST_CASE("measure chain positivity and transform") {
  const auto g = default_measure_grid(Real(20), 512);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& s = sample()[i];
    const auto chain = measure_chain(s, 2, g);
    for (const auto& m : chain) CHECK(positivity_check(m) == Verdict::pass);
  }
}

TEST_CASE("weight_gamma at lambda = 1 is the identity, and weighted transform agrees") {
  for (const auto& s : sample()) {
    CHECK(weight_gamma(s, Real(1)).coeffs() == s.coeffs());
    const EvalResult a = laplace_weighted_numeric(s, Real(1), Real(3));
    const EvalResult b = laplace_numeric(s, Real(3));
    CHECK(agree(a, b));
  }
}
