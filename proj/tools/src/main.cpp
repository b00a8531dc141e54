#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "parimutuel/error.hpp"
#include "parimutuel_harness/commands.hpp"
#include "parimutuel_harness/scenario.hpp"

namespace harness = parimutuel::harness;

namespace {

// Destination for CSV output: the file named by --out, or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw harness::ConfigError(path + ": cannot open output file");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parimutuel equilibrium solver and experiment harness"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  harness::RunOptions options;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "Scenario file")->required();
    cmd->add_option("--out", out_path, "Write CSV here instead of stdout");
    cmd->add_option("--fp-tol", options.fp_tol, "Fixed-point tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "Solve one scenario at its scalar kappa");
  add_common(solve);
  auto* sweep = app.add_subcommand("sweep", "Solve a scenario across its kappa grid");
  add_common(sweep);
  sweep->add_flag("--baseline", options.baseline, "Add a w=1e-10 baseline row per kappa");
  auto* take = app.add_subcommand("optimize-take", "Find the revenue-maximising kappa");
  add_common(take);
  take->add_option("--grid", options.grid, "Number of kappa grid points");
  auto* oracle = app.add_subcommand("oracle", "Compare against a discrete best-response oracle");
  add_common(oracle);
  oracle->add_option("--n", options.oracle_n, "Discrete population size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : harness::kExitConfigError;
  }

  try {
    const harness::Scenario scenario = harness::load_scenario(scenario_path);
    if (*solve) {
      Sink sink(out_path);
      return harness::run_solve(scenario, options, sink.stream(), std::cerr);
    }
    if (*sweep) {
      Sink sink(out_path);
      return harness::run_sweep(scenario, options, sink.stream(), std::cerr);
    }
    if (*take) {
      // Summary to stdout; the profile goes to --out when given.
      if (out_path.empty()) {
        return harness::run_optimize_take(scenario, options, std::cout, std::cout, std::cerr);
      }
      Sink sink(out_path);
      return harness::run_optimize_take(scenario, options, std::cout, sink.stream(), std::cerr);
    }
    Sink sink(out_path);
    return harness::run_oracle(scenario, options, sink.stream(), std::cerr);
  } catch (const harness::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return harness::kExitConfigError;
  } catch (const parimutuel::NoEquilibrium& e) {
    std::cerr << e.what() << "\n";
    return harness::kExitNoEquilibrium;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return harness::kExitConfigError;
  }
}
