#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "parimutuel/measure.hpp"

namespace parimutuel::harness {

/// Malformed or invalid scenario file. The message starts with
/// "<source>:<line>: " when the offending line is known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KappaSweep {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  double at(int i) const;
  friend bool operator==(const KappaSweep&, const KappaSweep&) = default;
};

struct Scenario {
  std::string name;
  nlohmann::json measure;  ///< tagged record, see build_measure
  double q = 0.5;
  double w = 1.0;
  std::variant<double, KappaSweep> kappa = 0.9;
  std::optional<double> p_actual;
  std::vector<std::string> metrics;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline constexpr double kBaselineBudget = 1e-10;

/// Metric column names accepted in a scenario's "metrics" list.
const std::vector<std::string>& known_metrics();

/// Builds a measure from its tagged record, e.g. {"kind":"wedge","n":10}.
/// Kinds: uniform, wedge, symmetrized_wedge, gaussian_mixture, tabulated, scaled.
BeliefMeasure build_measure(const nlohmann::json& spec);

Scenario parse_scenario(std::string_view text, std::string_view source = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);
std::string serialize_scenario(const Scenario& scenario);

}  // namespace parimutuel::harness
