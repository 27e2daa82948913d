// amlt: classify, transform and measure-chain front end.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "amlt/cli_report.hpp"
#include "amlt/error.hpp"

namespace {

constexpr int kUsageError = 3;

struct Flags {
  std::size_t kmax = 6;
  std::string grid;
  long prec = amlt::kDefaultPrecisionBits;
  std::string quad_tol = "1e-25";
  std::size_t order = 0;
  std::string format;
  std::uint64_t seed = amlt::acceptance::kDefaultSeed;
  bool quick = false;
  std::string out;
  std::size_t k = 3;
  std::string spec_path = "-";
};

void add_common(CLI::App* cmd, Flags& f, bool with_spec) {
  cmd->add_option("--prec", f.prec, "working precision in bits")->check(CLI::Range(16L, 1L << 20));
  cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", f.out, "write the report here instead of stdout");
  cmd->add_option("--quad-tol", f.quad_tol, "absolute quadrature tolerance");
  if (with_spec) cmd->add_option("spec", f.spec_path, "JSON spec file, - for stdin");
}

std::string read_spec(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplace transforms of absolutely monotonic functions: checks and reports"};
  app.require_subcommand(1);
  Flags f;

  auto* classify = app.add_subcommand("classify", "run the sign conditions, identities and decay checks");
  add_common(classify, f, true);
  classify->add_option("--kmax", f.kmax, "highest Widder order checked");
  classify->add_option("--grid", f.grid, "comma-separated x grid");
  classify->add_option("--order", f.order, "also test complete monotonicity of order r");

  auto* transform = app.add_subcommand("transform", "series value against numerical quadrature");
  add_common(transform, f, true);
  transform->add_option("--grid", f.grid, "comma-separated x values");

  auto* measures = app.add_subcommand("measures", "representing-measure chain with positivity verdicts");
  add_common(measures, f, true);
  measures->add_option("--k", f.k, "chain length");
  measures->add_option("--grid", f.grid, "x values for the Laplace cross-check");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  add_common(selftest, f, false);
  selftest->add_option("--seed", f.seed, "seed of the random series sample");
  selftest->add_flag("--quick", f.quick, "smaller samples");

  CLI11_PARSE(app, argc, argv);

  amlt::cli::CommandResult result;
  try {
    amlt::Real::set_default_precision(f.prec);
    amlt::cli::Options o;
    o.kmax = f.kmax;
    if (!f.grid.empty()) o.grid = amlt::cli::parse_grid(f.grid);
    o.quad_tol = f.quad_tol;
    (void)amlt::Real::parse(o.quad_tol);
    if (f.order > 0) o.order = f.order;
    o.seed = f.seed;
    o.quick = f.quick;
    o.k = f.k;
    if (f.format == "csv") o.format = amlt::cli::Format::csv;
    else if (f.format == "text" || (f.format.empty() && selftest->parsed())) o.format = amlt::cli::Format::text;
    else o.format = amlt::cli::Format::json;

    if (selftest->parsed()) {
      result = amlt::cli::cmd_selftest(o);
    } else {
      const amlt::Spec spec = amlt::parse_spec(read_spec(f.spec_path));
      if (classify->parsed()) result = amlt::cli::cmd_classify(spec, o);
      else if (transform->parsed()) result = amlt::cli::cmd_transform(spec, o);
      else result = amlt::cli::cmd_measures(spec, o);
    }
  } catch (const std::exception& e) {
    std::cerr << "amlt: " << e.what() << '\n';
    return kUsageError;
  }

  if (f.out.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(f.out);
    if (!out) {
      std::cerr << "amlt: cannot write '" << f.out << "'\n";
      return kUsageError;
    }
    out << result.output;
  }
  return result.exit_code;
}
