#include "amlt/widder_ops.hpp"

#include <string>

#include "amlt/error.hpp"

namespace amlt {

namespace {

Real minus_one_pow(std::size_t n) { return n % 2 == 0 ? Real(1) : Real(-1); }

Real local_scale(const Function& f, const Real& x) {
  try {
    return abs(f.eval(x).value);
  } catch (const Error&) {
    return Real(0);
  }
}

CheckEntry make_entry(std::string id, long k, long m, const Real& x, const EvalResult& r, Verdict v,
                      std::string detail = {}) {
  CheckEntry e;
  e.condition_id = std::move(id);
  e.k = k;
  e.m = m;
  e.detail = std::move(detail);
  e.x = x;
  e.value = r.value;
  e.bound = r.abs_error_bound;
  e.verdict = v;
  return e;
}

// Evaluates, turning a divergence into an inconclusive NaN result.
EvalResult eval_or_nan(const Function& f, const Real& x) {
  try {
    return f.eval(x);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DivergentAt) throw;
    EvalResult r;
    r.value = Real::nan();
    r.abs_error_bound = Real::infinity();
    return r;
  }
}

} // namespace

InvPowerSeries widder_image(const InvPowerSeries& ips, std::size_t j) {
  const std::size_t N = ips.truncation_order();
  if (j > N && !ips.finite()) throw Error(ErrorKind::OrderExceedsTruncation, "Widder order exceeds truncation order");
  if (j == 0) return ips;
  const Real& off = ips.offset();
  std::vector<Real> c;
  c.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    Real factor(1);
    for (std::size_t i = 1; i <= j; ++i) factor *= Real(n + i) + off - Real(j);
    c.push_back(ips.coeff(n) * factor);
  }
  TailModel tail = ips.tail();
  if (tail.known && !tail.rho.is_zero()) {
    tail.degree += static_cast<long>(j);
    tail.shift = max(tail.shift, abs(off) + Real(j + 1));
    if (!(Real(N + 2) + off - Real(j) > Real(0))) tail.sign = 0;
  }
  const Real rel = ips.coeff_rel_err() + Real(j + 1) * Real::unit_roundoff(Real::default_precision());
  return InvPowerSeries(std::move(c), off, tail, rel);
}

Function widder_function(const Function& f, std::size_t j) {
  if (const auto* s = f.series()) return Function(widder_image(*s, j));
  return f.times_power(Real(j)).derivative(j).scaled(minus_one_pow(j));
}

EvalResult recursion_step(const Function& f_prev, std::size_t j, const Real& x) {
  if (j == 0) throw Error(ErrorKind::IndexOutOfRange, "recursion_step needs j >= 1");
  const EvalResult d = f_prev.derivative(1, x);
  const EvalResult v = f_prev.eval(x);
  return (-x) * d - Real(j) * v;
}

EvalResult recursion_chain(const Function& f, std::size_t k, const Real& x) {
  std::vector<EvalResult> row;
  row.reserve(k + 1);
  for (std::size_t m = 0; m <= k; ++m) row.push_back(f.derivative(m, x));
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<EvalResult> next;
    next.reserve(k - j + 1);
    for (std::size_t m = 0; m + j <= k; ++m) next.push_back((-x) * row[m + 1] - Real(j + m) * row[m]);
    row = std::move(next);
  }
  return row.front();
}

PairResult derivative_recursion_check(const Function& f, std::size_t j, std::size_t k, const Real& x) {
  if (j < 1 || k < 1) throw Error(ErrorKind::IndexOutOfRange, "derivative recursion needs j, k >= 1");
  PairResult out;
  out.left = widder_function(f, j).derivative(k - 1, x);
  const Function prev = widder_function(f, j - 1);
  out.right = (-x) * prev.derivative(k, x) - Real(j + k - 1) * prev.derivative(k - 1, x);
  return out;
}

EvalResult sokal_T(const Function& f, std::size_t n, std::size_t k, const Real& lambda, const Real& x) {
  if (lambda.sign() <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
  const Real inner_power = Real(k + n) + lambda - Real(1);
  const Real outer_power = -(Real(n) + lambda - Real(1));
  return f.derivative(n).times_power(inner_power).derivative(k).times_power(outer_power).scaled(minus_one_pow(n)).eval(x);
}

PairResult widder_identity_check(const Function& f, std::size_t k, const Real& x) {
  if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "Widder identity needs k >= 1");
  PairResult out;
  out.left = f.times_power(Real(k)).derivative(2 * k - 1).times_power(Real(k - 1)).eval(x);
  out.right = f.derivative(k - 1).times_power(Real(2 * k - 1)).derivative(k).eval(x);
  return out;
}

bool CorollaryTable::nonnegative() const {
  for (const auto& row : rows)
    for (const auto& a : row)
      if (a.sign() < 0) return false;
  return true;
}

CorollaryTable corollary_coeffs(std::size_t k, std::size_t j_max) {
  if (k < 1 || j_max + 1 > k) throw Error(ErrorKind::IndexOutOfRange, "corollary table needs j_max <= k-1");
  CorollaryTable t;
  t.k = k;
  t.rows.push_back({Real(1)});
  for (std::size_t j = 0; j < j_max; ++j) {
    std::vector<Real> next(j + 2, Real(0));
    for (std::size_t l = 0; l <= j; ++l) {
      const Real& a = t.rows[j][l];
      // -x f_l^(k-1-j) = f_{l+1}^(k-j-2) + (k-1-j+l) f_l^(k-j-2)
      next[l + 1] += a;
      next[l] += Real(static_cast<long>(k) - 1 - static_cast<long>(j) + static_cast<long>(l)) * a;
    }
    t.rows.push_back(std::move(next));
  }
  return t;
}

PairResult corollary_identity_check(const Function& f, std::size_t j, std::size_t k, const Real& x) {
  if (k < 1 || j + 1 > k) throw Error(ErrorKind::IndexOutOfRange, "corollary identity needs j <= k-1");
  const CorollaryTable table = corollary_coeffs(k, j);
  PairResult out;
  out.left = f.derivative(k - 1).times_power(Real(j)).scaled(minus_one_pow(j)).eval(x);
  EvalResult sum = exact(Real(0));
  for (std::size_t l = 0; l <= j; ++l)
    sum = sum + table.at(j, l) * widder_function(f, l).derivative(k - j - 1, x);
  out.right = sum;
  return out;
}

PairResult step_derivative_check(const Function& f, std::size_t j, const Real& x) {
  if (j < 1) throw Error(ErrorKind::IndexOutOfRange, "first-order corollary check needs j >= 1");
  const Function prev = widder_function(f, j - 1);
  PairResult out;
  out.left = prev.times_power(Real(1)).derivative(1).scaled(Real(-1)).eval(x);
  out.right = widder_function(f, j).eval(x) + Real(j - 1) * prev.eval(x);
  return out;
}

CheckReport identity_report(const Function& f, std::size_t k_max, const std::vector<Real>& grid,
                            const Real& rel_tol) {
  CheckReport report;
  auto add = [&](const char* id, long k, long m, const Real& x, const PairResult& p) {
    const EvalResult diff = p.left - p.right;
    const bool ok = p.agree() || p.relative_difference() <= rel_tol;
    report.entries.push_back(make_entry(id, k, m, x, diff, ok ? Verdict::pass : Verdict::fail,
                                        "left " + p.left.value.str(40) + ", right " + p.right.value.str(40)));
  };
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (const auto& x : grid) add("eq7", static_cast<long>(k), -1, x, widder_identity_check(f, k, x));
    for (std::size_t j = 0; j + 1 <= k; ++j)
      for (const auto& x : grid)
        add("cor3.2", static_cast<long>(k), static_cast<long>(j), x, corollary_identity_check(f, j, k, x));
  }
  report.finalize();
  return report;
}

std::vector<Real> default_x_grid() {
  std::vector<Real> g;
  for (long e = -4; e <= 11; ++e) g.push_back(ldexp(Real(1), e));
  return g;
}

CheckReport check_conditions(const Function& f, const CheckOptions& options) {
  if (const auto* s = f.series(); s && !s->finite() && 2 * options.k_max > s->truncation_order())
    throw Error(ErrorKind::OrderExceedsTruncation, "k_max must not exceed N/2");
  CheckReport report;
  report.tolerances = options.tolerances;
  const auto& tol = options.tolerances;

  std::vector<Real> scale;
  for (const auto& x : options.grid) scale.push_back(local_scale(f, x));

  for (std::size_t k = 0; k <= options.k_max; ++k) {
    const Function fk = widder_function(f, k);
    const long kk = static_cast<long>(k);

    for (std::size_t i = 0; i < options.grid.size(); ++i) {
      const EvalResult r = eval_or_nan(fk, options.grid[i]);
      report.entries.push_back(make_entry("thm1.1.iv", kk, 0, options.grid[i], r, sign_verdict(r, +1, scale[i], tol)));
    }

    for (std::size_t m = 1; m <= options.depth; ++m) {
      const Function d = fk.derivative(m).scaled(minus_one_pow(m));
      for (std::size_t i = 0; i < options.grid.size(); ++i) {
        const EvalResult r = eval_or_nan(d, options.grid[i]);
        report.entries.push_back(make_entry("thm1.1.iii", kk, static_cast<long>(m), options.grid[i], r,
                                            sign_verdict(r, +1, scale[i], tol)));
      }
    }

    const Function v = k == 0 ? f : f.times_power(Real(k)).derivative(2 * k - 1);
    const int required = k == 0 ? +1 : -1;
    for (std::size_t i = 0; i < options.grid.size(); ++i) {
      const EvalResult r = eval_or_nan(v, options.grid[i]);
      report.entries.push_back(make_entry("thm1.1.v", kk, k == 0 ? 0 : static_cast<long>(2 * k - 1), options.grid[i],
                                          r, sign_verdict(r, required, scale[i], tol)));
    }

    // Nonnegative coefficients of f_k (including the tail) make f_k
    // completely monotonic outright.
    if (const auto* s = fk.series()) {
      bool holds = true;
      for (const auto& c : s->coeffs()) holds = holds && c.sign() >= 0;
      const auto& t = s->tail();
      const bool tail_ok = t.known && (t.rho.is_zero() || t.scale.is_zero() || t.sign >= 0);
      Witness w;
      w.condition_id = "thm1.1.iii";
      w.k = kk;
      w.holds = holds && tail_ok && Real(s->truncation_order() + 1) + s->offset() > Real(0);
      w.detail = holds ? (tail_ok ? "all coefficients of f_k nonnegative" : "tail sign not established")
                       : "negative coefficient in f_k";
      report.witnesses.push_back(std::move(w));
    }
  }
  report.finalize();
  return report;
}

CheckReport decay_check(const Function& f, std::size_t k_max, const DecayOptions& options) {
  std::vector<Real> grid = options.grid;
  if (grid.empty())
    for (long e = 1; e <= 6; ++e) grid.push_back(pow(Real(10), e));

  CheckReport report;
  auto run = [&](const Function& g, const std::string& id, const std::string& detail, long k, long m) {
    Real prev = Real::infinity();
    Real first(1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const EvalResult r = eval_or_nan(g, grid[i]);
      const Real mag = abs(r.value);
      if (i == 0) first = mag;
      bool ok = r.value.is_finite() && mag <= prev && (mag < prev || mag.is_zero());
      const Real limit = options.relative_final ? options.tolerance * first : options.tolerance;
      if (i + 1 == grid.size()) ok = ok && (mag < limit || mag.is_zero());
      report.entries.push_back(make_entry(id, k, m, grid[i], r, ok ? Verdict::pass : Verdict::fail, detail));
      prev = mag;
    }
  };

  for (std::size_t k = 0; k <= k_max; ++k) {
    const long kk = static_cast<long>(k);
    run(f.derivative(k).times_power(Real(k)), "lem2.3", "x^k f^(k)", kk, kk);
    const Function xk = f.times_power(Real(k));
    for (std::size_t nu = k; nu <= k + options.extra_nu; ++nu)
      run(xk.derivative(nu), "lem2.3", "(x^k f)^(nu)", kk, static_cast<long>(nu));
  }
  report.finalize();
  return report;
}

CmOrderResult cm_order_detect(const Function& f, std::size_t r, const std::vector<Real>& grid, const Tolerances& tol) {
  if (r < 2) throw Error(ErrorKind::IndexOutOfRange, "order detection needs r >= 2");
  CmOrderResult out;
  out.report.tolerances = tol;
  const Function g = f.times_power(Real(r)).derivative(1);
  for (const auto& x : grid) {
    const EvalResult v = eval_or_nan(g, x);
    out.report.entries.push_back(make_entry("cm_order", static_cast<long>(r), 1, x, v,
                                            sign_verdict(v, -1, local_scale(f, x), tol)));
  }
  out.report.finalize();
  out.verdict = out.report.summary;
  if (const auto* s = f.series()) {
    bool zero = true;
    for (std::size_t n = 0; n + 2 <= r && n <= s->truncation_order(); ++n) zero = zero && s->coeff(n).is_zero();
    out.zero_prefix = zero;
    if (out.verdict == Verdict::pass && !zero) out.verdict = Verdict::fail;
  }
  return out;
}

PolynomialDetection detect_polynomial(const Function& f) {
  PolynomialDetection out;
  if (const auto* s = f.series()) {
    if (!s->offset().is_zero()) {
      out.note = "nonzero offset: not the image of a polynomial";
      return out;
    }
    if (s->finite()) {
      std::optional<std::size_t> last;
      for (std::size_t n = 0; n <= s->truncation_order(); ++n)
        if (!s->coeff(n).is_zero()) last = n;
      if (!last) {
        out.note = "zero function";
        return out;
      }
      out.r = *last + 1;
      out.a_r = s->coeff(*last);
      out.note = "finitely supported coefficients";
      return out;
    }
    out.note = "infinitely many nonzero coefficients; x^k f(x) grows as x -> 0+";
    for (std::size_t k = 1; k <= 4; ++k) {
      for (long e = 1; e <= 4; ++e) {
        const Real x = ldexp(Real(1), -e);
        try {
          out.evidence.push_back({k, x, (pow(x, static_cast<long>(k)) * f.eval(x).value)});
        } catch (const Error&) {
          break;
        }
      }
    }
    return out;
  }

  // Probe x^r f(x) at two points near zero and accept a stable nonzero limit.
  const Real x1 = pow(Real(10), -20L);
  const Real x2 = pow(Real(10), -30L);
  for (std::size_t r = 1; r <= 16; ++r) {
    Real v1, v2;
    try {
      v1 = pow(x1, static_cast<long>(r)) * f.eval(x1).value;
      v2 = pow(x2, static_cast<long>(r)) * f.eval(x2).value;
    } catch (const Error&) {
      out.note = "could not evaluate near 0+";
      return out;
    }
    out.evidence.push_back({r, x1, v1});
    out.evidence.push_back({r, x2, v2});
    if (!v1.is_finite() || !v2.is_finite()) continue;
    if (v2.is_zero()) continue;
    if (relative_difference(v1, v2) < Real(1e-8)) {
      out.r = r;
      out.a_r = v2;
      out.note = "stable limit of x^r f(x) at 0+";
      return out;
    }
  }
  out.note = "no finite limit of x^r f(x) found for r <= 16";
  return out;
}

} // namespace amlt
