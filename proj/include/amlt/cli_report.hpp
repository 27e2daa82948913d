#pragma once

// Command implementations behind the `amlt` tool. Each returns the text to
// emit and the exit code: 0 pass, 1 fail, 2 inconclusive.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amlt/acceptance.hpp"
#include "amlt/check_report.hpp"
#include "amlt/spec_io.hpp"

namespace amlt::cli {

/// text is the plain line format of selftest; other commands treat it as json.
enum class Format { json, csv, text };

struct Options {
  std::size_t kmax = 6;
  /// Empty means the built-in grid of the command.
  std::vector<Real> grid;
  std::string quad_tol = "1e-25";
  std::optional<std::size_t> order;
  Format format = Format::json;
  std::uint64_t seed = acceptance::kDefaultSeed;
  bool quick = false;
  /// Chain length for `measures`.
  std::size_t k = 3;
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

int exit_code(Verdict v);

/// "0.5,1,2" or "1/2, 3"
std::vector<Real> parse_grid(const std::string& text);

CommandResult cmd_classify(const Spec& spec, const Options& options);
CommandResult cmd_transform(const Spec& spec, const Options& options);
CommandResult cmd_measures(const Spec& spec, const Options& options);
CommandResult cmd_selftest(const Options& options);

} // namespace amlt::cli
