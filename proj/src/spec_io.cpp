#include "amlt/spec_io.hpp"

#include <sstream>
#include <stdexcept>

#include "amlt/error.hpp"
#include "amlt/laplace_image.hpp"

namespace amlt {

namespace {

using nlohmann::json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  const Position p = position_at(text, offset);
  throw Error(ErrorKind::SpecParse,
              "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + what, p.line);
}

// Semantic errors carry no offset from the parser; point at the key instead.
[[noreturn]] void fail_key(std::string_view text, const std::string& key, const std::string& what) {
  const auto at = text.find("\"" + key + "\"");
  fail_at(text, at == std::string_view::npos ? 0 : at, what);
}

std::vector<Real> real_array(std::string_view text, const json& j, const std::string& key) {
  if (!j.is_array()) fail_key(text, key, "'" + key + "' must be an array");
  std::vector<Real> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      out.push_back(real_from_json(j[i]));
    } catch (const std::invalid_argument& e) {
      fail_key(text, key, "'" + key + "'[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

Real real_field(std::string_view text, const json& obj, const std::string& key, std::optional<Real> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    fail_key(text, key, "missing field '" + key + "'");
  }
  try {
    return real_from_json(obj.at(key));
  } catch (const std::invalid_argument& e) {
    fail_key(text, key, "'" + key + "': " + e.what());
  }
}

json real_json(const Real& r) { return r.str(); }

} // namespace

Real real_from_json(const json& j) {
  if (j.is_string()) return Real::parse(j.get<std::string>());
  if (j.is_number_integer()) return j.is_number_unsigned() ? Real(j.get<std::uint64_t>()) : Real(j.get<std::int64_t>());
  if (j.is_number_float()) return Real::parse(j.dump());
  throw std::invalid_argument("expected a number or a numeric string");
}

Function Spec::function() const {
  switch (kind) {
  case Kind::closed_form: return *closed;
  case Kind::series:
  case Kind::hyper: {
    if (kind == Kind::hyper && hyper->lambda) return laplace_coeffs(weight_gamma(*series, *hyper->lambda));
    return laplace_coeffs(*series);
  }
  case Kind::measure: break;
  }
  throw Error(ErrorKind::SpecParse, "a measure spec has no function to classify");
}

Spec parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::string msg = e.what();
    const auto colon = msg.rfind(": ");
    fail_at(text, e.byte > 0 ? e.byte - 1 : 0, colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
  if (!root.is_object()) fail_at(text, 0, "spec must be a JSON object");

  Spec spec;
  if (root.contains("name")) {
    if (!root["name"].is_string()) fail_key(text, "name", "'name' must be a string");
    spec.name = root["name"].get<std::string>();
  }

  const int kinds = static_cast<int>(root.contains("coeffs")) + static_cast<int>(root.contains("hyper")) +
                    static_cast<int>(root.contains("closed_form")) + static_cast<int>(root.contains("measure"));
  if (kinds != 1) fail_at(text, 0, "spec needs exactly one of 'coeffs', 'hyper', 'closed_form', 'measure'");

  try {
    if (root.contains("coeffs")) {
      spec.kind = Spec::Kind::series;
      std::vector<Real> c = real_array(text, root["coeffs"], "coeffs");
      if (c.empty()) fail_key(text, "coeffs", "'coeffs' is empty");
      try {
        spec.series.emplace(std::move(c));
      } catch (const Error& e) {
        fail_key(text, "coeffs", e.what());
      }
      if (spec.name.empty()) spec.name = "series";
      spec.series->set_name(spec.name);
    } else if (root.contains("hyper")) {
      spec.kind = Spec::Kind::hyper;
      const json& h = root["hyper"];
      if (!h.is_object()) fail_key(text, "hyper", "'hyper' must be an object");
      HyperParams p{real_field(text, h, "a"), real_field(text, h, "b"), real_field(text, h, "c"), std::nullopt};
      if (h.contains("lambda")) p.lambda = real_field(text, h, "lambda");
      try {
        p.validate();
      } catch (const Error& e) {
        fail_key(text, "hyper", e.what());
      }
      spec.hyper = p;
      spec.series.emplace(phi_1f2(p));
      if (spec.name.empty()) spec.name = spec.series->name();
    } else if (root.contains("closed_form")) {
      spec.kind = Spec::Kind::closed_form;
      if (!root["closed_form"].is_string()) fail_key(text, "closed_form", "'closed_form' must be a string");
      const std::string expr = root["closed_form"].get<std::string>();
      try {
        spec.closed.emplace(ClosedForm::parse(expr));
      } catch (const Error& e) {
        // Column inside the expression string, shifted to the document.
        const auto key = text.find("\"closed_form\"");
        const auto open = key == std::string_view::npos ? std::string_view::npos : text.find('"', key + 13);
        fail_at(text, open == std::string_view::npos ? 0 : open + e.index(), e.what());
      }
      if (spec.name.empty()) spec.name = expr;
    } else {
      spec.kind = Spec::Kind::measure;
      const json& m = root["measure"];
      if (!m.is_object()) fail_key(text, "measure", "'measure' must be an object");
      if (!m.contains("grid") || !m.contains("density")) fail_key(text, "measure", "measure needs 'grid' and 'density'");
      try {
        spec.measure.emplace(hand_built_measure(real_field(text, m, "atom0", Real(0)),
                                                real_array(text, m["grid"], "grid"),
                                                real_array(text, m["density"], "density")));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::SpecParse) throw;
        fail_key(text, "measure", e.what());
      }
      if (spec.name.empty()) spec.name = "measure";
      spec.measure->label = spec.name;
    }
  } catch (const json::exception& e) {
    fail_at(text, 0, e.what());
  }
  return spec;
}

json to_json(const CheckReport& r) {
  json out;
  out["summary"] = to_string(r.summary);
  out["tolerances"] = {{"abs_tol", real_json(r.tolerances.abs_tol)}, {"rel_tol", real_json(r.tolerances.rel_tol)}};
  json entries = json::array();
  for (const auto& e : r.entries) {
    json row = {{"condition_id", e.condition_id}, {"k", e.k}, {"x", real_json(e.x)},
                {"value", real_json(e.value)},    {"bound", real_json(e.bound)}, {"verdict", to_string(e.verdict)}};
    if (e.m >= 0) row["m"] = e.m;
    if (!e.detail.empty()) row["detail"] = e.detail;
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"condition_id", w.condition_id}, {"k", w.k}, {"holds", w.holds}, {"detail", w.detail}});
  out["witnesses"] = std::move(witnesses);
  return out;
}

std::string to_csv(const CheckReport& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  };
  std::ostringstream os;
  os << "condition_id,k,m,detail,x,value,bound,verdict\n";
  for (const auto& e : r.entries) {
    os << e.condition_id << ',' << e.k << ',';
    if (e.m >= 0) os << e.m;
    os << ',' << quote(e.detail) << ',' << e.x.str() << ',' << e.value.str() << ',' << e.bound.str() << ','
       << to_string(e.verdict) << '\n';
  }
  for (const auto& w : r.witnesses)
    os << w.condition_id << ',' << w.k << ",," << quote(w.detail) << ",,,," << (w.holds ? "pass" : "fail") << '\n';
  return os.str();
}

} // namespace amlt
