#include "amlt/acceptance.hpp"

#include <sstream>

#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/laplace_image.hpp"
#include "amlt/measure_chain.hpp"
#include "amlt/quad_engine.hpp"
#include "amlt/random_series.hpp"
#include "amlt/widder_ops.hpp"

namespace amlt::acceptance {

namespace {

std::string sci(const Real& v) { return v.str(3); }

const std::vector<Real>& transform_xs() {
  static const std::vector<Real> xs{Real(0.5), Real(1), Real(2), Real(10)};
  return xs;
}

Real h_exact(std::size_t k, const Real& x) { return exp(Real(1) / x) / pow(x, static_cast<long>(k + 1)); }

CriterionResult h_example() {
  CriterionResult r{1, "H-example identity", true, {}};
  const InvPowerSeries img = laplace_coeffs(h_series());
  const Function f = img;
  Real worst_series(0), worst_recursion(0);
  for (const auto& x : transform_xs()) {
    for (std::size_t k = 0; k <= 8; ++k) {
      const Real truth = h_exact(k, x);
      const Real series = eval_image(widder_image(img, k), x).value;
      // f_k from f_(k-1) by one recursion step, and the whole chain from f^(0..k).
      const Real step = k == 0 ? series : recursion_step(widder_function(f, k - 1), k, x).value;
      const Real chain = recursion_chain(f, k, x).value;
      worst_series = max(worst_series, relative_difference(series, truth));
      worst_recursion = max(worst_recursion, max(relative_difference(step, truth), relative_difference(chain, truth)));
    }
  }
  r.pass = worst_series <= Real(1e-30) && worst_recursion <= Real(1e-20);
  r.detail = "max rel err series " + sci(worst_series) + " (<= 1e-30), recursion " + sci(worst_recursion) +
             " (<= 1e-20) over x in {0.5,1,2,10}, k <= 8";
  return r;
}

CriterionResult dual_path(const std::vector<AMSeries>& sample, const Real& tol) {
  CriterionResult r{2, "dual-path transform", true, {}};
  std::size_t checks = 0, bad = 0;
  Real worst(0);
  for (const auto& s : sample) {
    const InvPowerSeries img = laplace_coeffs(s);
    for (const auto& x : transform_xs()) {
      const EvalResult a = eval_image(img, x);
      const EvalResult b = laplace_numeric(s, x, tol);
      ++checks;
      const Real diff = abs(a.value - b.value);
      const Real budget = a.abs_error_bound + b.abs_error_bound;
      if (!(diff <= budget)) ++bad;
      if (!budget.is_zero()) worst = max(worst, diff / budget);
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(sample.size()) + " certified series x " + std::to_string(transform_xs().size()) +
             " points, " + std::to_string(bad) + " outside combined bounds; max |diff|/bound " + sci(worst);
  return r;
}

CriterionResult remainder_split(const std::vector<AMSeries>& sample) {
  CriterionResult r{3, "remainder split", true, {}};
  std::size_t negative = 0, off = 0, checks = 0;
  Real worst_ulps(0);
  for (const auto& s : sample) {
    const InvPowerSeries img = laplace_coeffs(s);
    for (std::size_t n = 1; n <= 10; ++n) {
      const RemainderSplit split = split_remainder(img, n);
      for (const auto& c : split.tail.coeffs()) negative += c.sign() < 0 ? 1 : 0;
      if (split.tail.tail().sign < 0) ++negative;
      for (const auto& x : transform_xs()) {
        const Real whole = eval_image(img, x).value;
        const Real back = reconstruct(split, x).value;
        const Real u = ulp(whole);
        ++checks;
        const Real ulps = u.is_zero() ? (back.is_zero() ? Real(0) : Real::infinity()) : abs(back - whole) / u;
        worst_ulps = max(worst_ulps, ulps);
        if (ulps > Real(4)) ++off;
      }
    }
  }
  r.pass = negative == 0 && off == 0;
  r.detail = std::to_string(negative) + " negative tail coefficients, " + std::to_string(off) + "/" +
             std::to_string(checks) + " reconstructions beyond 4 ulp (max " + worst_ulps.str(3) + " ulp), n <= 10";
  return r;
}

std::vector<std::pair<std::string, Function>> identity_functions() {
  const HyperParams p123{Real(1), Real(2), Real(3), std::nullopt};
  return {{"H closed form", h_closed_form()},
          {"H series", laplace_coeffs(h_series())},
          {"1F2(1;2,3)", laplace_coeffs(phi_1f2(p123))},
          {"1/(x+1)", ClosedForm::parse("1/(x+1)")}};
}

CriterionResult widder_identity() {
  CriterionResult r{4, "Widder identity", true, {}};
  std::size_t checks = 0, bad = 0;
  Real worst(0);
  for (const auto& [name, f] : identity_functions()) {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (const auto& x : default_x_grid()) {
        const PairResult p = widder_identity_check(f, k, x);
        const Real rel = p.relative_difference();
        worst = max(worst, rel);
        ++checks;
        if (!(rel <= Real(1e-25))) ++bad;
      }
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(checks) + " checks (H, its series, 1F2(1;2,3), 1/(x+1); k <= 5; default grid), max rel " +
             sci(worst);
  return r;
}

CriterionResult corollary() {
  CriterionResult r{5, "corollary table identity", true, {}};
  std::size_t checks = 0, bad = 0;
  bool tables_ok = true;
  Real worst(0);
  for (std::size_t k = 1; k <= 5; ++k) tables_ok = tables_ok && corollary_coeffs(k, k - 1).nonnegative();
  for (const auto& [name, f] : identity_functions()) {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (std::size_t j = 0; j + 1 <= k; ++j) {
        for (const auto& x : default_x_grid()) {
          const PairResult p = corollary_identity_check(f, j, k, x);
          const Real rel = p.relative_difference();
          worst = max(worst, rel);
          ++checks;
          if (!(rel <= Real(1e-25))) ++bad;
        }
      }
    }
  }
  r.pass = bad == 0 && tables_ok;
  r.detail = std::to_string(checks) + " checks, max rel " + sci(worst) +
             (tables_ok ? ", all table entries nonnegative" : ", NEGATIVE table entry");
  return r;
}

CriterionResult measure_oracle() {
  CriterionResult r{6, "measure chain oracle", true, {}};
  std::vector<Real> exp_c;
  Real fact(1);
  for (std::size_t n = 0; n <= kDefaultTruncation; ++n) {
    if (n > 0) fact *= Real(n);
    exp_c.push_back(Real(1) / fact);
  }
  std::vector<std::pair<std::string, AMSeries>> ps;
  ps.emplace_back("e^t", AMSeries(exp_c));
  ps.emplace_back("h", h_series());
  ps.emplace_back("1F2(1;2,3)", phi_1f2(HyperParams{Real(1), Real(2), Real(3), std::nullopt}));

  const std::vector<Real> grid = default_measure_grid();
  Real worst_node(0), worst_laplace(0);
  std::size_t node_bad = 0, laplace_bad = 0, laplace_checks = 0, positivity_bad = 0;
  std::vector<std::string> skipped;
  for (const auto& [name, p] : ps) {
    std::vector<GridMeasure> sigmas;
    for (std::size_t j = 0; j <= 4; ++j) sigmas.push_back(sigma_j(p, j, grid));
    for (std::size_t j = 0; j <= 4; ++j) {
      const GridMeasure mu = mu_step(sigmas[j], j + 1);
      positivity_bad += positivity_check(sigmas[j]) == Verdict::pass ? 0 : 1;
      positivity_bad += positivity_check(mu) == Verdict::pass ? 0 : 1;
      const std::vector<Real> deriv = derivative_series(p, j + 1).coeffs();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const Real oracle = pow(grid[i], static_cast<long>(j + 1)) * eval_power_series(deriv, grid[i]);
        const Real diff = abs(mu.density[i] - oracle);
        if (diff.is_zero()) continue;
        const Real rel = oracle.is_zero() ? Real::infinity() : diff / abs(oracle);
        worst_node = max(worst_node, rel);
        if (rel > Real(1e-30)) ++node_bad;
      }
    }
    const InvPowerSeries img = laplace_coeffs(p);
    for (std::size_t k = 1; k <= 3; ++k) {
      const GridMeasure mu = mu_step(sigmas[k - 1], k);
      for (const Real& x : {Real(1), Real(2), Real(5)}) {
        // The transform of p exists only for x beyond its growth rate.
        if (!p.type_zero() && x <= p.type().tail_rate) {
          skipped.push_back(name + " k=" + std::to_string(k) + " x=" + x.str(2));
          continue;
        }
        const MeasureTransform m = laplace_of_measure(mu, x);
        const Real fk = eval_image(widder_image(img, k), x).value;
        const Real diff = abs(m.result.value - fk);
        worst_laplace = max(worst_laplace, diff);
        ++laplace_checks;
        if (!(diff <= Real(1e-6))) ++laplace_bad;
      }
    }
  }
  r.pass = node_bad == 0 && laplace_bad == 0 && positivity_bad == 0;
  std::ostringstream os;
  os << "nodewise max rel " << sci(worst_node) << " (" << node_bad << " over 1e-30); laplace max abs diff "
     << sci(worst_laplace) << " over " << laplace_checks << " checks (" << laplace_bad << " over 1e-6); "
     << positivity_bad << " positivity failures";
  if (!skipped.empty()) {
    os << "; outside domain:";
    for (const auto& s : skipped) os << ' ' << s;
  }
  r.detail = os.str();
  return r;
}

CriterionResult scaled_prediction() {
  CriterionResult r{7, "scaled-family failure prediction", true, {}};
  const std::vector<std::pair<std::string, InvPowerSeries>> fs{
      {"1/x", InvPowerSeries({Real(1)})}, {"H", laplace_coeffs(h_series())}};
  std::size_t bad = 0;
  Real worst(0);
  std::string quarter;
  for (const auto& [name, ips] : fs) {
    for (const Real& lambda : {Real::parse("0.3"), Real(0.5), Real::parse("1.7"), Real(2.5)}) {
      const ScaledFamily sf = scaled_family(ips, lambda);
      const std::size_t js = *sf.failure_order;
      for (std::size_t j = 0; j + 1 <= js; ++j) {
        const InvPowerSeries w = widder_image(sf.series, j);
        for (const auto& c : w.coeffs())
          if (c.sign() < 0) ++bad;
      }
      const Real c0 = widder_image(sf.series, js).coeffs().front();
      if (!(c0.sign() < 0)) ++bad;
      const Real rel = relative_difference(c0, sf.leading_coefficient);
      worst = max(worst, rel);
      if (rel > Real(1e-30)) ++bad;
      if (name == "1/x" && lambda == Real(0.5)) {
        const Real err = abs(c0 + Real(0.25));
        const bool ok = err <= Real(2) * ulp(Real(0.25));
        if (!ok) ++bad;
        quarter = "1/x, lambda=1/2: " + c0.str(20);
      }
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(bad) + " violations; max rel err of a_0 c_lambda " + sci(worst) + "; " + quarter;
  return r;
}

CriterionResult counterexample() {
  CriterionResult r{8, "counterexample detection", true, {}};
  const CheckReport rep = check_conditions(ClosedForm::parse("1/(x+1)"));
  std::size_t points = 0, positive = 0, failed = 0;
  for (const auto& e : rep.entries) {
    if (e.condition_id != "thm1.1.v" || e.k != 1) continue;
    ++points;
    positive += e.value.sign() > 0 ? 1 : 0;
    failed += e.verdict == Verdict::fail ? 1 : 0;
  }
  r.pass = rep.summary == Verdict::fail && points > 0 && positive == points && failed == points;
  r.detail = "thm1.1.v k=1: " + std::to_string(failed) + "/" + std::to_string(points) + " grid points fail with (x f)' > 0";
  return r;
}

CriterionResult hyper_duality(bool quick, const Real& tol) {
  CriterionResult r{9, "hypergeometric dualities", true, {}};
  const std::vector<Real> params = quick ? std::vector<Real>{Real(0.5), Real(2)}
                                         : std::vector<Real>{Real(0.5), Real(1), Real(2), Real(3)};
  const std::vector<Real> lambdas{Real(0.5), Real(1), Real(1.5), Real(2)};
  std::size_t plain = 0, weighted = 0, bad = 0;
  for (const auto& a : params)
    for (const auto& b : params)
      for (const auto& c : params) {
        HyperParams p{a, b, c, std::nullopt};
        const AMSeries s = phi_1f2(p);
        for (const auto& x : transform_xs()) {
          ++plain;
          if (!agree(f_2f2(p, x), laplace_numeric(s, x, tol))) ++bad;
          for (const auto& lam : lambdas) {
            if (quick && lam != Real(0.5) && lam != Real(2)) continue;
            p.lambda = lam;
            ++weighted;
            if (!agree(f_2f2_weighted(p, x), laplace_weighted_numeric(s, lam, x, tol))) ++bad;
          }
          p.lambda.reset();
        }
      }
  r.pass = bad == 0 && plain >= 64 / (quick ? 8 : 1);
  r.detail = std::to_string(plain) + " plain and " + std::to_string(weighted) + " weighted combinations, " +
             std::to_string(bad) + " outside combined bounds";
  return r;
}

CriterionResult decay() {
  CriterionResult r{10, "decay limits", true, {}};
  const std::vector<std::pair<std::string, Function>> fs{
      {"H", h_closed_form()},
      {"1F2(1;2,3)", laplace_coeffs(phi_1f2(HyperParams{Real(1), Real(2), Real(3), std::nullopt}))},
      {"1F2(1/2;1,2)", laplace_coeffs(phi_1f2(HyperParams{Real(0.5), Real(1), Real(2), std::nullopt}))}};
  DecayOptions opt;
  opt.extra_nu = 0;
  std::vector<std::string> failures;
  for (const auto& [name, f] : fs) {
    const CheckReport rep = decay_check(f, 4, opt);
    for (const auto& e : rep.entries) {
      if (e.detail != "x^k f^(k)" || e.verdict == Verdict::pass) continue;
      failures.push_back(name + " k=" + std::to_string(e.k) + " x=" + e.x.str(2) + " |value|=" + sci(abs(e.value)));
    }
  }
  r.pass = failures.empty();
  r.detail = "x = 1e1..1e6, k <= 4, final |x^k f^(k)| < 1e-5";
  for (const auto& f : failures) r.detail += "; fails " + f;
  return r;
}

template <class F>
CriterionResult guarded(int id, const char* name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return CriterionResult{id, name, false, std::string("error: ") + e.what()};
  }
}

} // namespace

std::vector<CriterionResult> run(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  auto record = [&](CriterionResult r) {
    if (options.on_result) options.on_result(r);
    out.push_back(std::move(r));
  };
  const Real tol(options.quad_tol);
  std::vector<AMSeries> sample;
  try {
    sample = random_certified_series(options.seed, options.quick ? 5 : 20);
  } catch (const std::exception&) {
  }

  record(guarded(1, "H-example identity", h_example));
  record(guarded(2, "dual-path transform", [&] { return dual_path(sample, tol); }));
  record(guarded(3, "remainder split", [&] { return remainder_split(sample); }));
  record(guarded(4, "Widder identity", widder_identity));
  record(guarded(5, "corollary table identity", corollary));
  record(guarded(6, "measure chain oracle", measure_oracle));
  record(guarded(7, "scaled-family failure prediction", scaled_prediction));
  record(guarded(8, "counterexample detection", counterexample));
  record(guarded(9, "hypergeometric dualities", [&] { return hyper_duality(options.quick, tol); }));
  record(guarded(10, "decay limits", decay));
  return out;
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

} // namespace amlt::acceptance
