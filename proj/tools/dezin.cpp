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

// Batch driver: identity verification, truncated spectra, flux sweeps and
// semiboundedness / kernel experiments, configured by one JSON document.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "dezin/dezin.hpp"
#include "dezin/forms_json.hpp"
#include "dezin/verify.hpp"
#include "experiment_config.hpp"

namespace {

using dezin::cli::ConfigError;
using dezin::cli::ExperimentConfig;
using dezin::cli::OutputFormat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kButterflyNote =
    "additive coupling d + i A (not a Peierls phase); the Hofstadter butterfly is a "
    "qualitative reference only";

std::string real(double x) { return fmt::format("{:.17g}", x); }

void configure_logging() {
  auto logger = spdlog::stderr_logger_st("dezin");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("DEZIN_LOG");
  const std::string level = env ? env : "off";
  if (level == "off" || level.empty()) {
    spdlog::set_level(spdlog::level::off);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    throw ConfigError("DEZIN_LOG", "must be off, info or debug, got '" + level + "'");
  }
}

// ---------------------------------------------------------------------------

int cmd_verify(const ExperimentConfig& cfg, std::ostream& os) {
  dezin::VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.trials = cfg.trials;
  vc.tolerance = cfg.tolerance;
  vc.radius = cfg.radius;
  vc.terms = cfg.terms;
  spdlog::info("verify: seed={} trials={} tolerance={}", vc.seed, vc.trials, vc.tolerance);
  const auto results = dezin::run_identity_suites(vc);
  const bool ok = dezin::all_passed(results);

  if (cfg.format == OutputFormat::csv) {
    os << "identity,trials,max_residual,tolerance,status\n";
    for (const auto& r : results) {
      os << r.name << ',' << r.trials << ',' << real(r.max_residual) << ','
         << real(r.tolerance) << ',' << dezin::to_string(r.status) << '\n';
    }
  } else {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"identity", r.name},
                      {"trials", r.trials},
                      {"max_residual", r.max_residual},
                      {"tolerance", r.tolerance},
                      {"status", dezin::to_string(r.status)}});
    }
    os << json{{"command", "verify"}, {"seed", cfg.seed}, {"passed", ok}, {"results", rows}}.dump(2)
       << '\n';
  }
  for (const auto& r : results) {
    spdlog::debug("{}: {:.3e} ({})", r.name, r.max_residual, dezin::to_string(r.status));
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct SpectrumRow {
  double key;  // N for spectra, flux for sweeps
  std::size_t index;
  double lambda;
};

void write_rows(std::ostream& os, const ExperimentConfig& cfg, const std::string& command,
                const std::string& key_name, const std::vector<SpectrumRow>& rows,
                bool integer_key, json extra = json::object()) {
  if (cfg.format == OutputFormat::csv) {
    os << key_name << ",index,lambda\n";
    for (const auto& r : rows) {
      os << (integer_key ? std::to_string(static_cast<long long>(r.key)) : real(r.key)) << ','
         << r.index << ',' << real(r.lambda) << '\n';
    }
    return;
  }
  json out = std::move(extra);
  out["command"] = command;
  json list = json::array();
  for (const auto& r : rows) {
    json row;
    if (integer_key) {
      row[key_name] = static_cast<long long>(r.key);
    } else {
      row[key_name] = r.key;
    }
    row["index"] = r.index;
    row["lambda"] = r.lambda;
    list.push_back(std::move(row));
  }
  out["rows"] = std::move(list);
  os << out.dump(2) << '\n';
}

std::vector<double> checked_spectrum(const dezin::HermitianOperator& op, std::int64_t count) {
  if (static_cast<std::size_t>(count) > op.dim()) {
    throw ConfigError("count", fmt::format("{} exceeds matrix dimension {}", count, op.dim()));
  }
  return dezin::lowest_eigenvalues(op, static_cast<std::size_t>(count));
}

int cmd_spectrum(const ExperimentConfig& cfg, std::ostream& os) {
  const auto A = dezin::parse_magnetic_preset(cfg.gauge);
  const auto V = dezin::parse_electric_preset(cfg.potential);
  spdlog::info("spectrum: N={} gauge={} potential={}", cfg.n, cfg.gauge, cfg.potential);
  const auto op = dezin::assemble(A, V, cfg.n);
  const auto values = checked_spectrum(op, cfg.count);
  std::vector<SpectrumRow> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows.push_back({static_cast<double>(cfg.n), i, values[i]});
  }
  write_rows(os, cfg, "spectrum", "N", rows, true,
             {{"gauge", cfg.gauge}, {"potential", cfg.potential}});
  return kExitOk;
}

int cmd_butterfly(const ExperimentConfig& cfg, std::ostream& os) {
  if (cfg.n > 10) throw ConfigError("N", "butterfly sweeps need N <= 10");
  for (const auto& f : cfg.fluxes) {
    if (f.q > 12) throw ConfigError("fluxes", "denominators must be <= 12");
  }
  std::vector<dezin::cli::Flux> fluxes = cfg.fluxes;
  std::stable_sort(fluxes.begin(), fluxes.end(),
                   [](const auto& a, const auto& b) { return a.value() < b.value(); });
  fluxes.erase(std::unique(fluxes.begin(), fluxes.end(),
                           [](const auto& a, const auto& b) { return a.value() == b.value(); }),
               fluxes.end());

  const auto V = dezin::parse_electric_preset(cfg.potential);
  std::cerr << "note: " << kButterflyNote << '\n';

  std::vector<SpectrumRow> rows;
  bool bounded = true;
  for (const auto& f : fluxes) {
    const double curl = 2.0 * std::numbers::pi * f.value();
    const auto A = cfg.gauge_family == "symmetric" ? dezin::MagneticPotential::symmetric(curl)
                                                   : dezin::MagneticPotential::landau(curl);
    const auto values = checked_spectrum(dezin::assemble(A, V, cfg.n), cfg.count);
    spdlog::debug("flux {}/{}: lambda_min={}", f.p, f.q, values.front());
    for (std::size_t i = 0; i < values.size(); ++i) {
      rows.push_back({f.value(), i, values[i]});
      if (V.floor() && values[i] < *V.floor() - cfg.tolerance) bounded = false;
    }
  }
  write_rows(os, cfg, "butterfly", "alpha", rows, false,
             {{"note", kButterflyNote},
              {"N", cfg.n},
              {"gauge_family", cfg.gauge_family},
              {"potential", cfg.potential}});
  return bounded ? kExitOk : kExitCheckFailed;
}

int cmd_semibound(const ExperimentConfig& cfg, std::ostream& os) {
  const auto A = dezin::parse_magnetic_preset(cfg.gauge);
  const auto V = dezin::parse_electric_preset(cfg.potential);
  std::vector<double> lambdas;
  double estimate = INFINITY;
  for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
    lambdas.push_back(dezin::lowest_eigenvalue(A, V, n));
    estimate = std::min(estimate, lambdas.back());
    spdlog::debug("N={} lambda_min={}", n, lambdas.back());
  }
  const auto floor = V.floor();
  const std::optional<double> margin =
      floor ? std::optional<double>(estimate - *floor) : std::nullopt;
  const bool ok = !margin || *margin >= -cfg.tolerance;

  if (cfg.format == OutputFormat::csv) {
    os << "N,lambda_min,estimate,floor,margin\n";
    double running = INFINITY;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      running = std::min(running, lambdas[i]);
      os << (i + 1) << ',' << real(lambdas[i]) << ',' << real(running) << ','
         << (floor ? real(*floor) : "") << ',' << (floor ? real(running - *floor) : "") << '\n';
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      rows.push_back({{"N", i + 1}, {"lambda_min", lambdas[i]}});
    }
    json out{{"command", "semibound"},
             {"gauge", cfg.gauge},
             {"potential", cfg.potential},
             {"N_max", cfg.n_max},
             {"estimate", estimate},
             {"floor", floor ? json(*floor) : json(nullptr)},
             {"margin", margin ? json(*margin) : json(nullptr)},
             {"passed", ok},
             {"rows", rows}};
    os << out.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_kernel(const ExperimentConfig& cfg, std::ostream& os) {
  const auto A = dezin::parse_magnetic_preset(cfg.gauge);
  const auto V = dezin::parse_electric_preset(cfg.potential).shifted(cfg.shift);
  const auto report = dezin::kernel_triviality(A, V, cfg.n_max, cfg.margin);
  if (cfg.format == OutputFormat::csv) {
    os << "N,lambda_min,positive\n";
    for (const auto& s : report.scales) {
      os << s.n << ',' << real(s.lambda_min) << ',' << (s.positive ? "true" : "false") << '\n';
    }
  } else {
    json rows = json::array();
    for (const auto& s : report.scales) {
      rows.push_back({{"N", s.n}, {"lambda_min", s.lambda_min}, {"positive", s.positive}});
    }
    os << json{{"command", "kernel"},
               {"gauge", cfg.gauge},
               {"potential", cfg.potential},
               {"shift", cfg.shift},
               {"margin", cfg.margin},
               {"trivial", report.trivial()},
               {"rows", rows}}
              .dump(2)
       << '\n';
  }
  return report.trivial() ? kExitOk : kExitCheckFailed;
}

int cmd_assemble(const ExperimentConfig& cfg, std::ostream& os) {
  const auto A = dezin::parse_magnetic_preset(cfg.gauge);
  const auto V = dezin::parse_electric_preset(cfg.potential);
  dezin::write_matrix_dump(os, dezin::assemble(A, V, cfg.n));
  return kExitOk;
}

int cmd_apply(const ExperimentConfig& cfg, std::ostream& os) {
  if (cfg.input.empty()) throw ConfigError("input", "path to a 0-form JSON file is required");
  std::ifstream in(cfg.input);
  if (!in) throw ConfigError("input", "cannot open '" + cfg.input + "'");
  dezin::Cochain phi(0);
  try {
    phi = dezin::cochain_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw ConfigError("input", e.what());
  }
  if (phi.grade() != 0) throw ConfigError("input", "expected a 0-form");
  const auto A = dezin::parse_magnetic_preset(cfg.gauge);
  const auto V = dezin::parse_electric_preset(cfg.potential);
  os << dezin::to_json(dezin::schrodinger_apply(phi, A, V)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete magnetic Schrodinger operator toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format;
  std::optional<std::uint64_t> seed;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const ExperimentConfig&, std::ostream&);
  };
  const std::vector<Command> commands{
      {"verify", "Run the randomized identity suites", cmd_verify},
      {"spectrum", "Lowest eigenvalues of a truncated operator", cmd_spectrum},
      {"butterfly", "Low spectrum across a list of fluxes p/q", cmd_butterfly},
      {"semibound", "Lower-bound estimate over growing boxes", cmd_semibound},
      {"kernel", "Uniform positivity of the shifted truncations", cmd_kernel},
      {"assemble", "Write the truncated matrix as coordinate triplets", cmd_assemble},
      {"apply", "Apply the operator to a 0-form JSON file", cmd_apply},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "Output path (default: stdout)");
    sub->add_option("--format", format, "csv or json");
    sub->add_option("--seed", seed, "Override the config seed");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    configure_logging();
    ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : dezin::cli::load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (!out_path.empty()) cfg.output = out_path;
    if (!format.empty()) cfg.format = dezin::cli::parse_format(format);
    dezin::cli::validate(cfg);

    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      // Render into memory first so a failed run never leaves a partial file.
      std::ostringstream buffer;
      const int code = commands[i].run(cfg, buffer);
      if (cfg.output.empty()) {
        std::cout << buffer.str();
      } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw ConfigError("output", "cannot write '" + cfg.output + "'");
        out << buffer.str();
      }
      return code;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
