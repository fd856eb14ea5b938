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

#ifndef DEZIN_POTENTIALS_HPP
#define DEZIN_POTENTIALS_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dezin/forms.hpp"
#include "dezin/random.hpp"

namespace dezin {

/**
 * Real magnetic potential A = sum A1(k,s) e1 + A2(k,s) e2.
 *
 * Either a finite table (zero off the table) or a rule evaluated at whatever
 * positions an operator touches, so presets such as the linear Landau gauge
 * are defined on the whole lattice without choosing a truncation.
 */
class MagneticPotential {
 public:
  using Components = std::array<double, 2>;
  using Rule = std::function<Components(Coord, Coord)>;
  using Table = std::map<LatticeIndex, Components>;

  MagneticPotential() : MagneticPotential(zero()) {}

  static MagneticPotential from_rule(Rule rule, std::string description) {
    return MagneticPotential(std::move(rule), nullptr, std::move(description));
  }

  static MagneticPotential from_table(Table table) {
    auto shared = std::make_shared<const Table>(std::move(table));
    Rule rule = [shared](Coord k, Coord s) -> Components {
      auto it = shared->find({k, s});
      return it == shared->end() ? Components{0.0, 0.0} : it->second;
    };
    return MagneticPotential(std::move(rule), shared, "table");
  }

  static MagneticPotential zero() {
    return from_rule([](Coord, Coord) { return Components{0.0, 0.0}; }, "zero");
  }
  static MagneticPotential constant(double a1, double a2) {
    return from_rule([a1, a2](Coord, Coord) { return Components{a1, a2}; },
                     "constant(" + std::to_string(a1) + "," + std::to_string(a2) + ")");
  }
  /// A1 = 0, A2 = alpha k: uniform curl alpha per plaquette.
  static MagneticPotential landau(double alpha) {
    return from_rule(
        [alpha](Coord k, Coord) { return Components{0.0, alpha * static_cast<double>(k)}; },
        "landau(" + std::to_string(alpha) + ")");
  }
  /// A1 = -alpha s / 2, A2 = alpha k / 2.
  static MagneticPotential symmetric(double alpha) {
    return from_rule(
        [alpha](Coord k, Coord s) {
          return Components{-0.5 * alpha * static_cast<double>(s),
                            0.5 * alpha * static_cast<double>(k)};
        },
        "symmetric(" + std::to_string(alpha) + ")");
  }
  /// Independent components uniform in [-amplitude, amplitude), hashed from
  /// (seed, k, s, channel).
  static MagneticPotential random(std::uint64_t seed, double amplitude) {
    return from_rule(
        [seed, amplitude](Coord k, Coord s) {
          return Components{amplitude * (2.0 * hashed_uniform(seed, k, s, 1) - 1.0),
                            amplitude * (2.0 * hashed_uniform(seed, k, s, 2) - 1.0)};
        },
        "random(" + std::to_string(seed) + "," + std::to_string(amplitude) + ")");
  }

  Components operator()(Coord k, Coord s) const { return rule_(k, s); }
  double a1(Coord k, Coord s) const { return rule_(k, s)[0]; }
  double a2(Coord k, Coord s) const { return rule_(k, s)[1]; }
  /// Component paired with an edge of the given channel.
  double on_edge(const Cell& edge) const {
    const auto c = rule_(edge.k, edge.s);
    return edge.channel == Channel::e1 ? c[0] : c[1];
  }

  /// Materializes A as a 1-form: on the finite table, or on a bounded window.
  Cochain as_form(const Window& w) const {
    Cochain out(1);
    auto emit = [&](Coord k, Coord s, const Components& c) {
      out.add({k, s, Channel::e1}, c[0]);
      out.add({k, s, Channel::e2}, c[1]);
    };
    if (table_) {
      for (const auto& [idx, c] : *table_) {
        if (w.contains(idx.k, idx.s)) emit(idx.k, idx.s, c);
      }
      return out;
    }
    const Coord n = w.radius();
    for (Coord k = -n; k <= n; ++k) {
      for (Coord s = -n; s <= n; ++s) emit(k, s, rule_(k, s));
    }
    return out;
  }

  const std::string& description() const { return description_; }

 private:
  MagneticPotential(Rule rule, std::shared_ptr<const Table> table, std::string description)
      : rule_(std::move(rule)), table_(std::move(table)), description_(std::move(description)) {}

  Rule rule_;
  std::shared_ptr<const Table> table_;
  std::string description_;
};

/// Real electric potential V(k,s), with an optional known lower bound.
class ElectricPotential {
 public:
  using Rule = std::function<double(Coord, Coord)>;
  using Table = std::map<LatticeIndex, double>;

  ElectricPotential() : ElectricPotential(zero()) {}

  static ElectricPotential from_rule(Rule rule, std::optional<double> floor,
                                     std::string description) {
    return ElectricPotential(std::move(rule), floor, std::move(description));
  }

  static ElectricPotential from_table(Table table) {
    double lo = 0.0;
    for (const auto& [idx, v] : table) lo = std::min(lo, v);
    auto shared = std::make_shared<const Table>(std::move(table));
    return from_rule(
        [shared](Coord k, Coord s) {
          auto it = shared->find({k, s});
          return it == shared->end() ? 0.0 : it->second;
        },
        lo, "table");
  }

  static ElectricPotential zero() {
    return from_rule([](Coord, Coord) { return 0.0; }, 0.0, "zero");
  }
  static ElectricPotential constant(double c) {
    return from_rule([c](Coord, Coord) { return c; }, c,
                     "constant(" + std::to_string(c) + ")");
  }
  /// V = w (k^2 + s^2).
  static ElectricPotential harmonic(double w) {
    std::optional<double> floor;
    if (w >= 0.0) floor = 0.0;
    return from_rule(
        [w](Coord k, Coord s) {
          const auto kd = static_cast<double>(k);
          const auto sd = static_cast<double>(s);
          return w * (kd * kd + sd * sd);
        },
        floor, "harmonic(" + std::to_string(w) + ")");
  }
  /// V = floor + amplitude * u, u uniform in [0, 1) hashed from (seed, k, s).
  static ElectricPotential random_bounded_below(std::uint64_t seed, double floor,
                                                double amplitude) {
    if (amplitude < 0.0) throw std::invalid_argument("amplitude must be >= 0");
    return from_rule(
        [seed, floor, amplitude](Coord k, Coord s) {
          return floor + amplitude * hashed_uniform(seed, k, s, 0);
        },
        floor,
        "random-bounded-below(" + std::to_string(seed) + "," + std::to_string(floor) + "," +
            std::to_string(amplitude) + ")");
  }

  double operator()(Coord k, Coord s) const { return rule_(k, s); }

  /// A constant c with V >= c everywhere, when one is known.
  std::optional<double> floor() const { return floor_; }

  /// V + c.
  ElectricPotential shifted(double c) const {
    std::optional<double> floor;
    if (floor_) floor = *floor_ + c;
    return from_rule([rule = rule_, c](Coord k, Coord s) { return rule(k, s) + c; }, floor,
                     description_ + "+" + std::to_string(c));
  }

  const std::string& description() const { return description_; }

 private:
  ElectricPotential(Rule rule, std::optional<double> floor, std::string description)
      : rule_(std::move(rule)), floor_(floor), description_(std::move(description)) {}

  Rule rule_;
  std::optional<double> floor_;
  std::string description_;
};

// ---------------------------------------------------------------------------
// Preset grammar: name or name(arg, ...), e.g. "landau(0.25)",
// "random(7, 0.5)", "random-bounded-below(3, -2, 1)".

namespace detail {

struct PresetCall {
  std::string name;
  std::vector<std::string> args;
};

inline std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
  return v;
}

inline PresetCall split_preset(std::string_view text) {
  text = trim(text);
  PresetCall call;
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    call.name = std::string(text);
    return call;
  }
  if (text.back() != ')') throw std::invalid_argument("preset missing ')': " + std::string(text));
  call.name = std::string(trim(text.substr(0, open)));
  std::string_view inner = trim(text.substr(open + 1, text.size() - open - 2));
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    call.args.emplace_back(trim(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return call;
}

inline double parse_real(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

inline std::uint64_t parse_seed(const std::string& s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not a seed: '" + s + "'");
  return v;
}

inline void expect_arity(const PresetCall& call, std::size_t n) {
  if (call.args.size() != n) {
    throw std::invalid_argument("preset '" + call.name + "' takes " + std::to_string(n) +
                                " argument(s), got " + std::to_string(call.args.size()));
  }
}

}  // namespace detail

inline MagneticPotential parse_magnetic_preset(std::string_view text) {
  const auto call = detail::split_preset(text);
  const auto& a = call.args;
  if (call.name == "zero") {
    detail::expect_arity(call, 0);
    return MagneticPotential::zero();
  }
  if (call.name == "constant") {
    detail::expect_arity(call, 2);
    return MagneticPotential::constant(detail::parse_real(a[0]), detail::parse_real(a[1]));
  }
  if (call.name == "landau") {
    detail::expect_arity(call, 1);
    return MagneticPotential::landau(detail::parse_real(a[0]));
  }
  if (call.name == "symmetric") {
    detail::expect_arity(call, 1);
    return MagneticPotential::symmetric(detail::parse_real(a[0]));
  }
  if (call.name == "random") {
    detail::expect_arity(call, 2);
    return MagneticPotential::random(detail::parse_seed(a[0]), detail::parse_real(a[1]));
  }
  throw std::invalid_argument("unknown magnetic preset '" + call.name + "'");
}

inline ElectricPotential parse_electric_preset(std::string_view text) {
  const auto call = detail::split_preset(text);
  const auto& a = call.args;
  if (call.name == "zero") {
    detail::expect_arity(call, 0);
    return ElectricPotential::zero();
  }
  if (call.name == "constant") {
    detail::expect_arity(call, 1);
    return ElectricPotential::constant(detail::parse_real(a[0]));
  }
  if (call.name == "harmonic") {
    detail::expect_arity(call, 1);
    return ElectricPotential::harmonic(detail::parse_real(a[0]));
  }
  if (call.name == "random-bounded-below") {
    detail::expect_arity(call, 3);
    return ElectricPotential::random_bounded_below(
        detail::parse_seed(a[0]), detail::parse_real(a[1]), detail::parse_real(a[2]));
  }
  throw std::invalid_argument("unknown electric preset '" + call.name + "'");
}

}  // namespace dezin

#endif  // DEZIN_POTENTIALS_HPP
