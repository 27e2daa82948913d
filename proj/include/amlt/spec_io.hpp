#pragma once

// JSON specs in, JSON/CSV reports out. Numbers travel as decimal strings.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "amlt/am_series.hpp"
#include "amlt/check_report.hpp"
#include "amlt/closed_form.hpp"
#include "amlt/function.hpp"
#include "amlt/hyper_gallery.hpp"
#include "amlt/measure_chain.hpp"

namespace amlt {

/// One of
///   {"coeffs": ["1", "1/2", 0.25, ...]}
///   {"hyper": {"a": .., "b": .., "c": .., "lambda": ..}}
///   {"closed_form": "1/(x+1)"}
///   {"measure": {"atom0": .., "grid": [..], "density": [..]}}
/// with an optional "name".
struct Spec {
  enum class Kind { series, hyper, closed_form, measure };
  Kind kind = Kind::series;
  std::string name;
  std::optional<AMSeries> series;  // also set for hyper (the 1F2 series)
  std::optional<HyperParams> hyper;
  std::optional<ClosedForm> closed;
  std::optional<GridMeasure> measure;

  /// The Laplace image as a handle; throws SpecParse for a measure spec.
  Function function() const;
};

/// Throws Error(SpecParse) with "line L, column C" in the message.
Spec parse_spec(std::string_view text);

/// Accepts a JSON string (decimal or p/q) or a JSON number (read back from
/// its shortest round-trip decimal form).
Real real_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckReport& r);
/// condition_id,k,m,detail,x,value,bound,verdict; witnesses follow with empty x.
std::string to_csv(const CheckReport& r);

} // namespace amlt
