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

#include <gtest/gtest.h>

#include "experiment_config.hpp"

namespace dezin::cli {
namespace {

using nlohmann::json;

std::string failing_field(const json& j) {
  try {
    config_from_json(j);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

TEST(ExperimentConfig, EmptyDocumentUsesDefaults) {
  const auto c = config_from_json(json::object());
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.trials, 200);
  EXPECT_EQ(c.tolerance, 1e-12);
  EXPECT_EQ(c.gauge, "zero");
  EXPECT_EQ(c.format, OutputFormat::csv);
}

TEST(ExperimentConfig, ParsesEveryField) {
  const auto c = config_from_json(json::parse(R"j({
    "seed": 7, "trials": 10, "tolerance": 1e-10, "radius": 4, "terms": 5,
    "N": 2, "N_max": 3, "count": 4, "gauge": "landau(0.5)",
    "potential": "harmonic(1)", "gauge_family": "symmetric",
    "fluxes": ["1/3", "2/5", 0], "margin": 0.001, "shift": 2.5,
    "input": "x.json", "output": "out.csv", "format": "json"})j"));
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.n, 2);
  EXPECT_EQ(c.fluxes.size(), 3u);
  EXPECT_EQ(c.fluxes[1].p, 2);
  EXPECT_EQ(c.fluxes[1].q, 5);
  EXPECT_EQ(c.fluxes[2].value(), 0.0);
  EXPECT_EQ(c.format, OutputFormat::json);
  EXPECT_EQ(c.shift, 2.5);
}

TEST(ExperimentConfig, DiagnosticsNameTheField) {
  EXPECT_EQ(failing_field(json{{"trials", 0}}), "trials");
  EXPECT_EQ(failing_field(json{{"trials", "many"}}), "trials");
  EXPECT_EQ(failing_field(json{{"tolerance", 0.0}}), "tolerance");
  EXPECT_EQ(failing_field(json{{"N", -1}}), "N");
  EXPECT_EQ(failing_field(json{{"N_max", 0}}), "N_max");
  EXPECT_EQ(failing_field(json{{"count", 0}}), "count");
  EXPECT_EQ(failing_field(json{{"gauge", "wobble(1)"}}), "gauge");
  EXPECT_EQ(failing_field(json{{"potential", "constant(a)"}}), "potential");
  EXPECT_EQ(failing_field(json{{"fluxes", json::array({"1/0"})}}), "fluxes");
  EXPECT_EQ(failing_field(json{{"fluxes", json::array({"one third"})}}), "fluxes");
  EXPECT_EQ(failing_field(json{{"format", "xml"}}), "format");
  EXPECT_EQ(failing_field(json{{"seed", -3}}), "seed");
  EXPECT_EQ(failing_field(json{{"tolerence", 1e-9}}), "tolerence");
  EXPECT_EQ(failing_field(json::array()), "config");
}

}  // namespace
}  // namespace dezin::cli
