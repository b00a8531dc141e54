#include "parimutuel_harness/commands.hpp"

#include <ostream>
#include <vector>

#include <fmt/format.h>

#include "parimutuel/error.hpp"
#include "parimutuel/metrics.hpp"
#include "parimutuel/oracle.hpp"
#include "parimutuel/parallel.hpp"
#include "parimutuel/stackelberg.hpp"

namespace parimutuel::harness {
namespace {

constexpr std::size_t kFixedNumericColumns = 7;  // p_star .. residual

std::string metric_value(const std::string& name, const MarketReport& r) {
  if (name == "house_revenue") return format_number(r.house_revenue);
  if (name == "diffuse_actual_profit") return format_number(r.diffuse_actual_profit.value());
  if (name == "diffuse_subjective_profit") return format_number(r.diffuse_subjective_profit);
  if (name == "atomic_subjective_profit") return format_number(r.atomic_subjective_profit);
  return format_number(r.pool_total);
}

std::string row_prefix(const std::string& name, double kappa, double q, double w,
                       std::string_view status) {
  return fmt::format("{},{},{},{},{}", name, format_number(kappa), format_number(q),
                     format_number(w), status);
}

// One CSV row for (scenario, kappa, w); failures are reported in the status
// column with the numeric columns left empty.
std::string equilibrium_row(const Scenario& s, const std::string& name, double kappa, double w,
                            const BeliefMeasure& measure, const RunOptions& options) {
  const MarketParams params{kappa, s.q, w};
  try {
    const Equilibrium eq = solve(params, measure, {.fp_tol = options.fp_tol});
    const MarketReport report = make_report(eq, params, measure, s.p_actual);
    std::string row = row_prefix(name, kappa, s.q, w, "ok");
    for (double v : {eq.p_star, eq.diffuse.d1, eq.diffuse.d2, eq.atomic.a1, eq.atomic.a2,
                     eq.residual}) {
      row += "," + format_number(v);
    }
    for (const auto& m : s.metrics) row += "," + metric_value(m, report);
    return row;
  } catch (const NoEquilibrium&) {
    return row_prefix(name, kappa, s.q, w, "no_equilibrium") +
           std::string(kFixedNumericColumns - 1 + s.metrics.size(), ',');
  }
}

}  // namespace

std::string format_number(double x) { return fmt::format("{:.12g}", x == 0.0 ? 0.0 : x); }

std::string equilibrium_csv_header(const Scenario& scenario) {
  std::string h = "name,kappa,q,w,status,p_star,d1_star,d2_star,a1_star,a2_star,residual";
  for (const auto& m : scenario.metrics) h += "," + m;
  return h;
}

int run_solve(const Scenario& s, const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  const auto* kappa = std::get_if<double>(&s.kappa);
  if (!kappa) {
    err << s.name << ": solve needs a scalar kappa\n";
    return kExitConfigError;
  }
  const BeliefMeasure measure = build_measure(s.measure);
  try {
    (void)solve({*kappa, s.q, s.w}, measure, {.fp_tol = options.fp_tol});
  } catch (const NoEquilibrium& e) {
    err << e.what() << "\n";
    return kExitNoEquilibrium;
  }
  out << kSchemaLine << "\n" << equilibrium_csv_header(s) << "\n"
      << equilibrium_row(s, s.name, *kappa, s.w, measure, options) << "\n";
  return kExitOk;
}

int run_sweep(const Scenario& s, const RunOptions& options, std::ostream& out,
              std::ostream& err) {
  const auto* sweep = std::get_if<KappaSweep>(&s.kappa);
  if (!sweep) {
    err << s.name << ": sweep needs a {lo, hi, steps} kappa record\n";
    return kExitConfigError;
  }
  const BeliefMeasure measure = build_measure(s.measure);
  const std::size_t per_kappa = options.baseline ? 2 : 1;
  const auto steps = static_cast<std::size_t>(sweep->steps);
  std::vector<std::string> rows(steps * per_kappa);
  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        const double kappa = sweep->at(static_cast<int>(i / per_kappa));
        const bool is_baseline = options.baseline && i % per_kappa == 0;
        rows[i] = is_baseline
                      ? equilibrium_row(s, s.name + "_baseline", kappa, kBaselineBudget, measure,
                                        options)
                      : equilibrium_row(s, s.name, kappa, s.w, measure, options);
      },
      options.workers);

  out << kSchemaLine << "\n" << equilibrium_csv_header(s) << "\n";
  for (const auto& r : rows) out << r << "\n";
  return kExitOk;
}

int run_optimize_take(const Scenario& s, const RunOptions& options, std::ostream& summary,
                      std::ostream& profile, std::ostream& err) {
  if (options.grid < 16) {
    err << s.name << ": --grid must be at least 16\n";
    return kExitConfigError;
  }
  const BeliefMeasure measure = build_measure(s.measure);
  const TakeOptimum opt = optimize_take(
      measure, s.q, s.w,
      {.grid_points = options.grid, .fp_tol = options.fp_tol, .workers = options.workers});

  summary << kSchemaLine << "\nname,q,w,kappa_star,revenue_star\n"
          << fmt::format("{},{},{},{},{}\n", s.name, format_number(s.q), format_number(s.w),
                         format_number(opt.kappa_star), format_number(opt.revenue_star));
  profile << kSchemaLine << "\nkappa,house_revenue\n";
  for (const auto& sample : opt.profile) {
    profile << format_number(sample.kappa) << "," << format_number(sample.revenue) << "\n";
  }
  return kExitOk;
}

int run_oracle(const Scenario& s, const RunOptions& options, std::ostream& out,
               std::ostream& err) {
  const auto* kappa = std::get_if<double>(&s.kappa);
  if (!kappa) {
    err << s.name << ": oracle needs a scalar kappa\n";
    return kExitConfigError;
  }
  if (options.oracle_n < 2) {
    err << s.name << ": --n must be at least 2\n";
    return kExitConfigError;
  }
  const BeliefMeasure measure = build_measure(s.measure);
  const MarketParams params{*kappa, s.q, s.w};
  Equilibrium eq;
  try {
    eq = solve(params, measure, {.fp_tol = options.fp_tol});
  } catch (const NoEquilibrium& e) {
    err << e.what() << "\n";
    return kExitNoEquilibrium;
  }
  const OracleResult approx = iterate_best_response(discretize(measure, options.oracle_n), params);
  out << kSchemaLine << "\nname,kappa,n,p_approx,p_star,gap,converged,iterations\n"
      << fmt::format("{},{},{},{},{},{},{},{}\n", s.name, format_number(*kappa), options.oracle_n,
                     format_number(approx.p_approx), format_number(eq.p_star),
                     format_number(std::abs(approx.p_approx - eq.p_star)),
                     approx.converged ? "true" : "false", approx.iterations);
  return kExitOk;
}

}  // namespace parimutuel::harness
