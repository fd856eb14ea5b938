// Copyright 2026 The Dezin Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEZIN_TOOLS_EXPERIMENT_CONFIG_HPP
#define DEZIN_TOOLS_EXPERIMENT_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dezin/potentials.hpp"

namespace dezin::cli {

/// A configuration problem; `field()` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Flux {
  std::int64_t p = 0;
  std::int64_t q = 1;
  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

enum class OutputFormat { csv, json };

/// One experiment run. Every field has a default so an empty document is a
/// valid configuration.
struct ExperimentConfig {
  std::uint64_t seed = 42;
  int trials = 200;
  double tolerance = 1e-12;
  std::int64_t radius = 8;
  int terms = 24;

  std::int64_t n = 1;
  std::int64_t n_max = 4;
  std::int64_t count = 3;

  std::string gauge = "zero";
  std::string potential = "zero";
  std::string gauge_family = "landau";
  std::vector<Flux> fluxes{{0, 1}, {1, 4}, {1, 3}, {1, 2}};

  double margin = 1e-12;
  double shift = 0.0;

  std::string input;
  std::string output;
  OutputFormat format = OutputFormat::csv;
};

namespace detail {

inline std::int64_t get_integer(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "must be an integer");
  return v.get<std::int64_t>();
}

inline double get_real(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(key, "must be a number");
  return v.get<double>();
}

inline std::string get_string(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_string()) throw ConfigError(key, "must be a string");
  return v.get<std::string>();
}

inline Flux parse_flux(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    Flux f;
    if (slash == std::string::npos) {
      f.p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return f;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    f.p = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    f.q = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
    return f;
  } catch (const std::exception&) {
    throw ConfigError("fluxes", "entry '" + text + "' is not of the form p/q");
  }
}

}  // namespace detail

inline OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ConfigError("format", "must be 'csv' or 'json', got '" + text + "'");
}

/// Field-level validation shared by file and command-line sources.
inline void validate(const ExperimentConfig& c) {
  if (c.trials < 1) throw ConfigError("trials", "must be >= 1");
  if (!(c.tolerance > 0.0)) throw ConfigError("tolerance", "must be > 0");
  if (c.radius < 1) throw ConfigError("radius", "must be >= 1");
  if (c.terms < 1) throw ConfigError("terms", "must be >= 1");
  if (c.n < 0) throw ConfigError("N", "must be >= 0");
  if (c.n_max < 1) throw ConfigError("N_max", "must be >= 1");
  if (c.count < 1) throw ConfigError("count", "must be >= 1");
  if (!(c.margin >= 0.0)) throw ConfigError("margin", "must be >= 0");
  if (!std::isfinite(c.shift)) throw ConfigError("shift", "must be finite");
  if (c.gauge_family != "landau" && c.gauge_family != "symmetric") {
    throw ConfigError("gauge_family", "must be 'landau' or 'symmetric'");
  }
  for (const auto& f : c.fluxes) {
    if (f.q < 1) throw ConfigError("fluxes", "denominator must be >= 1");
  }
  try {
    parse_magnetic_preset(c.gauge);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("gauge", e.what());
  }
  try {
    parse_electric_preset(c.potential);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("potential", e.what());
  }
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config", "must be a JSON object");
  static const std::set<std::string> known{
      "seed",   "trials",    "tolerance",    "radius", "terms",  "N",      "N_max",
      "count",  "gauge",     "potential",    "fluxes", "margin", "shift",  "gauge_family",
      "input",  "output",    "format"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError(key, "unknown config field");
  }

  ExperimentConfig c;
  using namespace detail;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() >= 0)) {
      throw ConfigError("seed", "must be a non-negative integer");
    }
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("trials")) c.trials = static_cast<int>(get_integer(j, "trials"));
  if (j.contains("tolerance")) c.tolerance = get_real(j, "tolerance");
  if (j.contains("radius")) c.radius = get_integer(j, "radius");
  if (j.contains("terms")) c.terms = static_cast<int>(get_integer(j, "terms"));
  if (j.contains("N")) c.n = get_integer(j, "N");
  if (j.contains("N_max")) c.n_max = get_integer(j, "N_max");
  if (j.contains("count")) c.count = get_integer(j, "count");
  if (j.contains("gauge")) c.gauge = get_string(j, "gauge");
  if (j.contains("potential")) c.potential = get_string(j, "potential");
  if (j.contains("gauge_family")) c.gauge_family = get_string(j, "gauge_family");
  if (j.contains("margin")) c.margin = get_real(j, "margin");
  if (j.contains("shift")) c.shift = get_real(j, "shift");
  if (j.contains("input")) c.input = get_string(j, "input");
  if (j.contains("output")) c.output = get_string(j, "output");
  if (j.contains("format")) c.format = parse_format(get_string(j, "format"));
  if (j.contains("fluxes")) {
    const auto& list = j["fluxes"];
    if (!list.is_array()) throw ConfigError("fluxes", "must be an array of \"p/q\" strings");
    c.fluxes.clear();
    for (const auto& entry : list) {
      if (entry.is_string()) {
        c.fluxes.push_back(parse_flux(entry.get<std::string>()));
      } else if (entry.is_number_integer()) {
        c.fluxes.push_back({entry.get<std::int64_t>(), 1});
      } else {
        throw ConfigError("fluxes", "entries must be \"p/q\" strings");
      }
    }
  }
  validate(c);
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  ExperimentConfig c = config_from_json(j);
  // Relative input paths are resolved against the config file's directory.
  if (!c.input.empty() && std::filesystem::path(c.input).is_relative()) {
    c.input = (std::filesystem::path(path).parent_path() / c.input).string();
  }
  return c;
}

}  // namespace dezin::cli

#endif  // DEZIN_TOOLS_EXPERIMENT_CONFIG_HPP
