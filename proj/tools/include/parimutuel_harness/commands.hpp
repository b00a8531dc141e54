#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "parimutuel/equilibrium.hpp"
#include "parimutuel_harness/scenario.hpp"

namespace parimutuel::harness {

enum ExitCode : int { kExitOk = 0, kExitConfigError = 1, kExitNoEquilibrium = 2 };

struct RunOptions {
  double fp_tol = kDefaultFixedPointTolerance;
  bool baseline = false;        ///< sweep: add a w = 1e-10 row before each kappa
  int grid = 256;               ///< optimize-take grid size
  std::size_t oracle_n = 2000;  ///< oracle population size
  unsigned workers = 0;         ///< 0 = hardware concurrency
};

/// Versioned header comment emitted at the top of every CSV.
inline constexpr const char* kSchemaLine = "# schema=1";

/// 12 significant digits.
std::string format_number(double x);

/// Column header line for the per-kappa equilibrium CSV of a scenario.
std::string equilibrium_csv_header(const Scenario& scenario);

// Each command writes CSV to `out`, diagnostics to `err`, and returns an
// ExitCode.
int run_solve(const Scenario& scenario, const RunOptions& options, std::ostream& out,
              std::ostream& err);
int run_sweep(const Scenario& scenario, const RunOptions& options, std::ostream& out,
              std::ostream& err);
/// Summary record goes to `summary`; the kappa/revenue profile to `profile`.
int run_optimize_take(const Scenario& scenario, const RunOptions& options, std::ostream& summary,
                      std::ostream& profile, std::ostream& err);
int run_oracle(const Scenario& scenario, const RunOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace parimutuel::harness
