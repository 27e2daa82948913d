#include "amlt/cli_report.hpp"

#include <sstream>

#include "amlt/error.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/laplace_image.hpp"
#include "amlt/measure_chain.hpp"
#include "amlt/quad_engine.hpp"
#include "amlt/widder_ops.hpp"

namespace amlt::cli {

namespace {

using nlohmann::json;

std::string kind_name(Spec::Kind k) {
  switch (k) {
  case Spec::Kind::series: return "series";
  case Spec::Kind::hyper: return "hyper";
  case Spec::Kind::closed_form: return "closed_form";
  case Spec::Kind::measure: return "measure";
  }
  return "series";
}

json spec_header(const Spec& spec, const char* command) {
  json j;
  j["command"] = command;
  j["spec"] = spec.name;
  j["kind"] = kind_name(spec.kind);
  j["precision"] = Real::default_precision();
  if (spec.series) {
    j["certificate"] = to_string(spec.series->certificate());
    j["truncation_order"] = spec.series->truncation_order();
  }
  if (spec.hyper && spec.hyper->lambda) j["lambda"] = spec.hyper->lambda->str();
  return j;
}

std::vector<Real> decay_grid() {
  std::vector<Real> g;
  for (long e = 1; e <= 8; ++e) g.push_back(pow(Real(10), e));
  return g;
}

Verdict worst(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

const AMSeries& require_series(const Spec& spec, const char* command) {
  if (!spec.series) throw Error(ErrorKind::SpecParse, std::string(command) + " needs a 'coeffs' or 'hyper' spec");
  return *spec.series;
}

// x^-lambda f for the unweighted image f of the 1F2 series must first fail
// at order [lambda] + 2 with n = 0 coefficient a_0 c_lambda.
CheckReport scaled_failure(const Spec& spec) {
  const ScaledFamily fam = scaled_family(laplace_coeffs(*spec.series), *spec.hyper->lambda);
  const std::size_t j = *fam.failure_order;
  Witness w;
  w.condition_id = "prop4.failure";
  w.k = static_cast<long>(j);
  bool earlier_ok = true;
  for (std::size_t i = 0; i < j; ++i) {
    const InvPowerSeries img = widder_image(fam.series, i);
    for (const auto& c : img.coeffs()) earlier_ok = earlier_ok && c.sign() >= 0;
  }
  const Real c0 = widder_image(fam.series, j).coeff(0);
  const Real rel = relative_difference(c0, fam.leading_coefficient);
  w.holds = earlier_ok && c0.sign() < 0 && rel <= Real(1e-30);
  w.detail = "x^-lambda f: order " + std::to_string(j) + " leading coefficient " + c0.str(20) + ", predicted " +
             fam.leading_coefficient.str(20) + (earlier_ok ? "" : "; an earlier order already fails");
  CheckReport r;
  r.witnesses.push_back(std::move(w));
  r.finalize();
  return r;
}

} // namespace

int exit_code(Verdict v) {
  switch (v) {
  case Verdict::pass: return 0;
  case Verdict::fail: return 1;
  case Verdict::inconclusive: return 2;
  }
  return 2;
}

std::vector<Real> parse_grid(const std::string& text) {
  std::vector<Real> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) throw std::invalid_argument("empty entry in grid '" + text + "'");
    Real v = Real::parse(item);
    if (v.sign() <= 0) throw std::invalid_argument("grid points must be positive: '" + item + "'");
    out.push_back(std::move(v));
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

CommandResult cmd_classify(const Spec& spec, const Options& options) {
  const Function f = spec.function();
  const std::vector<Real> grid = options.grid.empty() ? default_x_grid() : options.grid;

  CheckOptions co;
  co.k_max = options.kmax;
  co.grid = grid;
  const CheckReport conditions = check_conditions(f, co);
  const CheckReport identities = identity_report(f, std::min<std::size_t>(options.kmax, 5), grid);

  DecayOptions dopt;
  dopt.grid = decay_grid();
  dopt.relative_final = true;
  const CheckReport decay = decay_check(f, options.kmax, dopt);

  const PolynomialDetection poly = detect_polynomial(f);
  std::optional<CmOrderResult> order;
  if (options.order) order = cm_order_detect(f, *options.order, grid);

  CheckReport all = conditions;
  all.append(identities);
  all.append(decay);
  std::optional<CheckReport> scaled;
  if (spec.hyper && spec.hyper->lambda && !spec.hyper->lambda->is_integer()) {
    scaled = scaled_failure(spec);
    all.append(*scaled);
  }
  if (order) all.append(order->report);
  Verdict summary = all.summary;
  if (order) summary = worst(summary, order->verdict);

  CommandResult out;
  out.exit_code = exit_code(summary);
  if (options.format == Format::csv) {
    out.output = to_csv(all);
    return out;
  }
  json j = spec_header(spec, "classify");
  j["summary"] = to_string(summary);
  j["kmax"] = options.kmax;
  j["conditions"] = to_json(conditions);
  j["identities"] = to_json(identities);
  j["decay"] = to_json(decay);
  if (scaled) j["scaled_failure"] = to_json(*scaled);
  json p;
  if (poly.r) {
    p["r"] = *poly.r;
    p["a_r"] = poly.a_r.str();
  }
  p["note"] = poly.note;
  json ev = json::array();
  for (const auto& s : poly.evidence) ev.push_back({{"k", s.k}, {"x", s.x.str()}, {"value", s.value.str()}});
  p["evidence"] = std::move(ev);
  j["polynomial"] = std::move(p);
  if (order) {
    json o = to_json(order->report);
    o["r"] = *options.order;
    o["verdict"] = to_string(order->verdict);
    if (order->zero_prefix) o["zero_prefix"] = *order->zero_prefix;
    j["cm_order"] = std::move(o);
  }
  out.output = j.dump(2) + "\n";
  return out;
}

CommandResult cmd_transform(const Spec& spec, const Options& options) {
  const AMSeries& s = require_series(spec, "transform");
  const Real tol = Real::parse(options.quad_tol);
  const std::vector<Real> xs =
      options.grid.empty() ? std::vector<Real>{Real(0.5), Real(1), Real(2), Real(10)} : options.grid;
  const bool weighted = spec.hyper && spec.hyper->lambda;
  const InvPowerSeries img = laplace_coeffs(s);

  struct Row {
    Real x;
    EvalResult series, quad;
    Verdict verdict = Verdict::inconclusive;
    std::string note;
  };
  std::vector<Row> rows;
  Verdict summary = Verdict::pass;
  for (const auto& x : xs) {
    Row row{x, {}, {}, Verdict::inconclusive, {}};
    try {
      if (spec.hyper)
        row.series = weighted ? f_2f2_weighted(*spec.hyper, x) : f_2f2(*spec.hyper, x);
      else
        row.series = eval_image(img, x);
      row.quad = weighted ? laplace_weighted_numeric(s, *spec.hyper->lambda, x, tol) : laplace_numeric(s, x, tol);
      const bool bounded = row.series.bounded() && row.quad.bounded();
      row.verdict = !bounded ? Verdict::inconclusive : (agree(row.series, row.quad) ? Verdict::pass : Verdict::fail);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CertificateInsufficient && e.kind() != ErrorKind::DivergentAt &&
          e.kind() != ErrorKind::ToleranceUnreachable)
        throw;
      row.note = e.what();
    }
    summary = worst(summary, row.verdict);
    rows.push_back(std::move(row));
  }

  CommandResult out;
  out.exit_code = exit_code(summary);
  if (options.format == Format::csv) {
    std::ostringstream os;
    os << "x,series,series_bound,quadrature,quadrature_bound,abs_diff,verdict\n";
    for (const auto& r : rows) {
      os << r.x.str() << ',' << r.series.value.str() << ',' << r.series.abs_error_bound.str() << ','
         << r.quad.value.str() << ',' << r.quad.abs_error_bound.str() << ','
         << abs(r.series.value - r.quad.value).str() << ',' << to_string(r.verdict) << '\n';
    }
    out.output = os.str();
    return out;
  }
  json j = spec_header(spec, "transform");
  j["summary"] = to_string(summary);
  j["quad_tol"] = options.quad_tol;
  j["weighted"] = weighted;
  json arr = json::array();
  for (const auto& r : rows) {
    json row = {{"x", r.x.str()},
                {"series", r.series.value.str()},
                {"series_bound", r.series.abs_error_bound.str()},
                {"quadrature", r.quad.value.str()},
                {"quadrature_bound", r.quad.abs_error_bound.str()},
                {"abs_diff", abs(r.series.value - r.quad.value).str()},
                {"verdict", to_string(r.verdict)}};
    if (!r.note.empty()) row["note"] = r.note;
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  out.output = j.dump(2) + "\n";
  return out;
}

CommandResult cmd_measures(const Spec& spec, const Options& options) {
  struct Item {
    GridMeasure measure;
    std::optional<std::vector<Real>> oracle;  // cdf oracle for sigma_j, density oracle for the last
    std::string oracle_of;
    std::optional<std::size_t> order;  // k of f_k it represents
  };
  std::vector<Item> items;
  std::optional<InvPowerSeries> img;

  if (spec.measure) {
    items.push_back({*spec.measure, std::nullopt, {}, std::nullopt});
  } else {
    const AMSeries& p = require_series(spec, "measures");
    if (options.k == 0) throw Error(ErrorKind::IndexOutOfRange, "measures needs k >= 1");
    img = laplace_coeffs(p);
    const std::vector<GridMeasure> chain = measure_chain(p, options.k);
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const AMSeries d = derivative_series(p, j);
      std::vector<Real> oracle;
      for (const auto& t : chain[j].grid)
        oracle.push_back(pow(t, static_cast<long>(j)) * eval_power_series(d.coeffs(), t));
      const bool last = j + 1 == chain.size();
      items.push_back({chain[j], std::move(oracle), last ? "density" : "cdf", last ? std::optional(j) : std::nullopt});
    }
  }

  const std::vector<Real> xs = options.grid.empty() ? std::vector<Real>{Real(1), Real(2), Real(5)} : options.grid;
  Verdict summary = Verdict::pass;
  std::vector<Verdict> positivity;
  for (const auto& it : items) {
    positivity.push_back(positivity_check(it.measure));
    summary = worst(summary, positivity.back());
  }

  CommandResult out;
  out.exit_code = exit_code(summary);
  if (options.format == Format::csv) {
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i)
      os << "# " << items[i].measure.label << " atom0=" << items[i].measure.atom0.str(20)
         << " positivity=" << to_string(positivity[i]) << '\n';
    os << "measure,t,density,cdf,oracle\n";
    for (const auto& it : items) {
      const auto& m = it.measure;
      for (std::size_t i = 0; i < m.size(); ++i) {
        os << m.label << ',' << m.grid[i].str() << ',' << m.density[i].str() << ',' << m.cdf[i].str() << ',';
        if (it.oracle) os << (*it.oracle)[i].str();
        os << '\n';
      }
    }
    out.output = os.str();
    return out;
  }

  json j = spec_header(spec, "measures");
  j["summary"] = to_string(summary);
  json arr = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    json m;
    m["label"] = it.measure.label;
    m["atom0"] = it.measure.atom0.str();
    m["nodes"] = it.measure.size();
    m["positivity"] = to_string(positivity[i]);
    if (it.oracle) {
      const auto& against = it.oracle_of == "cdf" ? it.measure.cdf : it.measure.density;
      Real rel(0);
      for (std::size_t n = 0; n < against.size(); ++n) rel = max(rel, relative_difference(against[n], (*it.oracle)[n]));
      m["oracle"] = it.oracle_of;
      m["oracle_max_rel_diff"] = rel.str(6);
    }
    if (it.order && img) {
      json lap = json::array();
      for (const auto& x : xs) {
        const MeasureTransform t = laplace_of_measure(it.measure, x);
        json row = {{"x", x.str()},
                    {"value", t.result.value.str()},
                    {"bound", t.result.abs_error_bound.str()},
                    {"grid_truncated", t.grid_truncated}};
        try {
          row["f_k"] = eval_image(widder_image(*img, *it.order), x).value.str();
        } catch (const Error&) {
        }
        lap.push_back(std::move(row));
      }
      m["laplace"] = std::move(lap);
    }
    arr.push_back(std::move(m));
  }
  j["measures"] = std::move(arr);
  out.output = j.dump(2) + "\n";
  return out;
}

CommandResult cmd_selftest(const Options& options) {
  acceptance::SuiteOptions so;
  so.seed = options.seed;
  so.quick = options.quick;
  so.quad_tol = std::stod(options.quad_tol);
  const auto results = acceptance::run(so);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;

  CommandResult out;
  out.exit_code = passed == results.size() ? 0 : 1;
  if (options.format == Format::json) {
    json j;
    j["command"] = "selftest";
    j["seed"] = options.seed;
    j["quick"] = options.quick;
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["criteria"] = std::move(arr);
    j["passed"] = passed;
    j["total"] = results.size();
    out.output = j.dump(2) + "\n";
  } else if (options.format == Format::text) {
    std::ostringstream os;
    for (const auto& r : results) os << acceptance::format_line(r) << '\n';
    os << passed << "/" << results.size() << " criteria pass\n";
    out.output = os.str();
  } else {
    std::ostringstream os;
    os << "id,name,pass,detail\n";
    for (const auto& r : results) {
      std::string d = r.detail;
      for (auto& c : d)
        if (c == '"') c = '\'';
      os << r.id << ',' << r.name << ',' << (r.pass ? "pass" : "fail") << ",\"" << d << "\"\n";
    }
    out.output = os.str();
  }
  return out;
}

} // namespace amlt::cli
