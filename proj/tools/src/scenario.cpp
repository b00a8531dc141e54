#include "parimutuel_harness/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "parimutuel/error.hpp"
#include "parimutuel/stackelberg.hpp"

namespace parimutuel::harness {
namespace {

using nlohmann::json;

class Reader {
 public:
  Reader(std::string_view text, std::string_view source) : text_(text), source_(source) {}

  [[noreturn]] void fail(std::string_view key, const std::string& message) const {
    throw ConfigError(anchor(line_of(key)) + message);
  }

  [[noreturn]] void fail_at(std::size_t byte, const std::string& message) const {
    throw ConfigError(anchor(line_at(byte)) + message);
  }

  const json& require(const json& obj, std::string_view key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail({}, "missing required field \"" + std::string(key) + "\"");
    return *it;
  }

  double number(const json& obj, std::string_view key) const {
    const json& v = require(obj, key);
    if (!v.is_number()) fail(key, "field \"" + std::string(key) + "\" must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, "field \"" + std::string(key) + "\" must be finite");
    return x;
  }

  int integer(const json& obj, std::string_view key) const {
    const json& v = require(obj, key);
    if (!v.is_number_integer()) fail(key, "field \"" + std::string(key) + "\" must be an integer");
    return v.get<int>();
  }

 private:
  std::string anchor(std::size_t line) const {
    std::string out(source_);
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": ";
  }

  std::size_t line_at(std::size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + byte, '\n'));
  }

  // First line mentioning "key"; 0 when the key is absent or empty.
  std::size_t line_of(std::string_view key) const {
    if (key.empty()) return 0;
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text_.find(quoted);
    return pos == std::string_view::npos ? 0 : line_at(pos);
  }

  std::string_view text_;
  std::string_view source_;
};

std::vector<double> number_array(const json& spec, const char* key) {
  auto it = spec.find(key);
  if (it == spec.end() || !it->is_array()) {
    throw DomainError(std::string("measure field \"") + key + "\" must be an array of numbers");
  }
  std::vector<double> out;
  for (const auto& v : *it) {
    if (!v.is_number()) throw DomainError(std::string("measure field \"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

int measure_order(const json& spec) {
  auto it = spec.find("n");
  if (it == spec.end() || !it->is_number_integer()) {
    throw DomainError("measure field \"n\" must be an integer");
  }
  return it->get<int>();
}

}  // namespace

double KappaSweep::at(int i) const {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

const std::vector<std::string>& known_metrics() {
  static const std::vector<std::string> names = {
      "house_revenue", "diffuse_actual_profit", "diffuse_subjective_profit",
      "atomic_subjective_profit", "pool_total"};
  return names;
}

BeliefMeasure build_measure(const json& spec) {
  if (!spec.is_object()) throw DomainError("measure must be a record");
  auto kind_it = spec.find("kind");
  if (kind_it == spec.end() || !kind_it->is_string()) {
    throw DomainError("measure needs a string field \"kind\"");
  }
  const auto kind = kind_it->get<std::string>();
  if (kind == "uniform") return BeliefMeasure::uniform();
  if (kind == "wedge") return BeliefMeasure::wedge(measure_order(spec));
  if (kind == "symmetrized_wedge") return BeliefMeasure::symmetrized_wedge(measure_order(spec));
  if (kind == "gaussian_mixture") {
    return BeliefMeasure::gaussian_mixture(number_array(spec, "weights"),
                                           number_array(spec, "means"),
                                           number_array(spec, "stddevs"));
  }
  if (kind == "tabulated") {
    auto it = spec.find("points");
    if (it == spec.end() || !it->is_array()) {
      throw DomainError("measure field \"points\" must be an array of [p, density] pairs");
    }
    std::vector<std::pair<double, double>> knots;
    for (const auto& pt : *it) {
      if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number()) {
        throw DomainError("tabulated points must be [p, density] number pairs");
      }
      knots.emplace_back(pt[0].get<double>(), pt[1].get<double>());
    }
    return BeliefMeasure::tabulated(std::move(knots));
  }
  if (kind == "scaled") {
    auto f = spec.find("factor");
    auto b = spec.find("base");
    if (f == spec.end() || !f->is_number() || b == spec.end()) {
      throw DomainError("scaled measure needs numeric \"factor\" and a \"base\" measure");
    }
    return BeliefMeasure::scaled(build_measure(*b), f->get<double>());
  }
  throw DomainError("unknown measure kind \"" + kind + "\"");
}

Scenario parse_scenario(std::string_view text, std::string_view source) {
  const Reader reader(text, source);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    reader.fail_at(e.byte == 0 ? 0 : e.byte - 1, std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) reader.fail_at(0, "scenario must be a record");

  Scenario s;
  const json& name = reader.require(doc, "name");
  if (!name.is_string()) reader.fail("name", "field \"name\" must be a string");
  s.name = name.get<std::string>();

  s.measure = reader.require(doc, "measure");
  try {
    (void)build_measure(s.measure);
  } catch (const DomainError& e) {
    reader.fail("measure", std::string("invalid measure: ") + e.what());
  }

  s.q = reader.number(doc, "q");
  if (s.q < 0.0 || s.q > 1.0) reader.fail("q", "q must lie in [0, 1]");
  s.w = reader.number(doc, "w");
  if (!(s.w > 0.0)) reader.fail("w", "w must be positive");

  const json& kappa = reader.require(doc, "kappa");
  if (kappa.is_number()) {
    const double k = kappa.get<double>();
    if (!(k > 0.0 && k < 1.0)) reader.fail("kappa", "kappa must lie in (0, 1)");
    s.kappa = k;
  } else if (kappa.is_object()) {
    KappaSweep sweep{reader.number(kappa, "lo"), reader.number(kappa, "hi"),
                     reader.integer(kappa, "steps")};
    if (sweep.lo < kKappaSearchLo) reader.fail("lo", "sweep lo must be at least 0.5001");
    if (sweep.hi > kKappaSearchHi) reader.fail("hi", "sweep hi must be at most 0.9999");
    if (sweep.lo > sweep.hi) reader.fail("lo", "sweep lo must not exceed hi");
    if (sweep.steps < 2) reader.fail("steps", "sweep steps must be at least 2");
    s.kappa = sweep;
  } else {
    reader.fail("kappa", "kappa must be a number or a {lo, hi, steps} record");
  }

  if (doc.contains("p_actual")) {
    const double p = reader.number(doc, "p_actual");
    if (p < 0.0 || p > 1.0) reader.fail("p_actual", "p_actual must lie in [0, 1]");
    s.p_actual = p;
  }

  if (doc.contains("metrics")) {
    const json& metrics = doc.at("metrics");
    if (!metrics.is_array()) reader.fail("metrics", "metrics must be an array of names");
    for (const auto& m : metrics) {
      if (!m.is_string()) reader.fail("metrics", "metric names must be strings");
      auto n = m.get<std::string>();
      const auto& known = known_metrics();
      if (std::find(known.begin(), known.end(), n) == known.end()) {
        reader.fail("metrics", "unknown metric \"" + n + "\"");
      }
      if (n == "diffuse_actual_profit" && !s.p_actual) {
        reader.fail("metrics", "diffuse_actual_profit requires p_actual");
      }
      s.metrics.push_back(std::move(n));
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

std::string serialize_scenario(const Scenario& s) {
  json doc = json::object();
  doc["name"] = s.name;
  doc["measure"] = s.measure;
  doc["q"] = s.q;
  doc["w"] = s.w;
  if (const auto* k = std::get_if<double>(&s.kappa)) {
    doc["kappa"] = *k;
  } else {
    const auto& sweep = std::get<KappaSweep>(s.kappa);
    doc["kappa"] = {{"lo", sweep.lo}, {"hi", sweep.hi}, {"steps", sweep.steps}};
  }
  if (s.p_actual) doc["p_actual"] = *s.p_actual;
  doc["metrics"] = s.metrics;
  return doc.dump(2) + "\n";
}

}  // namespace parimutuel::harness
