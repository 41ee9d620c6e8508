// Copyright 2026 The bestarm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bestarm/errors.h"
#include "bestarm/harness.h"

namespace bestarm {
namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "name",  "scenario", "P",     "V",         "delta",     "alpha",
      "epsilon_slack",     "trials", "seed",     "modes",     "max_steps",
      "el_radius_scale",   "output_dir"};
  return keys;
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ValidationError(key + ": " + what);
}

double number(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number()) fail(key, "expected a number");
  return v.get<double>();
}

std::uint64_t count(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_float()) {
    // Allows 1e7 style literals as long as they are whole.
    const double d = v.get<double>();
    if (d >= 0.0 && d == std::floor(d) && d < 1.8e19) {
      return static_cast<std::uint64_t>(d);
    }
  }
  fail(key, "expected a nonnegative integer");
}

std::vector<double> vector_of_numbers(const json& v, const std::string& key) {
  if (!v.is_array()) fail(key, "expected an array of numbers");
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number()) fail(key, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Scenario scenario_from(const json& doc) {
  if (doc.contains("scenario")) {
    if (doc.contains("P") || doc.contains("V")) {
      fail("scenario", "give either a builtin scenario name or P and V, not both");
    }
    if (!doc["scenario"].is_string()) fail("scenario", "expected a string");
    return find_scenario(doc["scenario"].get<std::string>());
  }
  if (!doc.contains("P")) fail("P", "required key is missing");
  if (!doc.contains("V")) fail("V", "required key is missing");

  std::vector<double> values = vector_of_numbers(doc["V"], "V");
  std::optional<SupportVector> support;
  try {
    support.emplace(std::move(values));
  } catch (const ContractViolation& e) {
    fail("V", e.what());
  }

  const json& rows = doc["P"];
  if (!rows.is_array()) fail("P", "expected an array of rows");
  std::vector<SimplexVector> arms;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const std::string key = "P[" + std::to_string(a) + "]";
    std::vector<double> row = vector_of_numbers(rows[a], key);
    if (row.size() != support->size()) {
      fail(key, "has " + std::to_string(row.size()) + " entries but V has " +
                    std::to_string(support->size()));
    }
    try {
      arms.emplace_back(std::move(row));
    } catch (const ContractViolation& e) {
      fail(key, e.what());
    }
  }
  const std::string name =
      doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                      : std::string("custom");
  try {
    return {name, ProblemInstance(name, std::move(arms), std::move(*support))};
  } catch (const ContractViolation& e) {
    fail("P", e.what());
  } catch (const DegenerateInstance& e) {
    fail("P", e.what());
  }
}

}  // namespace

ExperimentSpec parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().contains(key)) fail(key, "unknown key");
  }

  ExperimentSpec spec{.scenario = scenario_from(doc), .config = {}, .modes = {}};
  if (doc.contains("name") && doc["name"].is_string()) {
    spec.scenario.label = doc["name"].get<std::string>();
  }
  RunConfig& config = spec.config;

  if (!doc.contains("delta")) fail("delta", "required key is missing (risk has no default)");
  config.delta = number(doc, "delta");
  if (!(config.delta > 0.0 && config.delta < 1.0)) fail("delta", "must lie in (0, 1)");

  if (doc.contains("alpha")) {
    config.alpha = number(doc, "alpha");
    if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) fail("alpha", "must lie in [0, 1]");
  }
  if (doc.contains("epsilon_slack")) {
    config.epsilon_slack = number(doc, "epsilon_slack");
    if (!(config.epsilon_slack >= 0.0)) fail("epsilon_slack", "must be nonnegative");
  }
  if (doc.contains("el_radius_scale")) {
    config.el_radius_scale = number(doc, "el_radius_scale");
    if (!(config.el_radius_scale > 0.0)) fail("el_radius_scale", "must be positive");
  }
  if (doc.contains("seed")) config.seed = count(doc, "seed");
  if (doc.contains("max_steps")) {
    config.max_steps = count(doc, "max_steps");
    if (config.max_steps < spec.scenario.instance.num_arms()) {
      fail("max_steps", "must be at least the number of arms");
    }
  }
  if (doc.contains("trials")) {
    spec.trials = count(doc, "trials");
    if (spec.trials < 1) fail("trials", "must be at least 1");
  }
  if (doc.contains("modes")) {
    const json& modes = doc["modes"];
    if (!modes.is_array() || modes.empty()) fail("modes", "expected a nonempty array");
    for (const json& m : modes) {
      if (!m.is_string()) fail("modes", "expected mode names");
      BoundMode mode;
      try {
        mode = parse_mode(m.get<std::string>());
      } catch (const ValidationError& e) {
        fail("modes", e.what());
      }
      if (std::find(spec.modes.begin(), spec.modes.end(), mode) != spec.modes.end()) {
        fail("modes", "duplicate mode '" + m.get<std::string>() + "'");
      }
      spec.modes.push_back(mode);
    }
  } else {
    spec.modes.assign(std::begin(kAllModes), std::end(kAllModes));
  }
  if (doc.contains("output_dir")) {
    if (!doc["output_dir"].is_string()) fail("output_dir", "expected a string");
    spec.output_dir = doc["output_dir"].get<std::string>();
  }
  return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace bestarm
