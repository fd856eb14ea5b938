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

#ifndef DEZIN_RANDOM_HPP
#define DEZIN_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "dezin/sparse_form.hpp"

namespace dezin {

// Portable randomness. The engine is std::mt19937_64, whose output sequence
// is fixed by the C++ standard; the conversions below avoid the
// implementation-defined standard distributions so that sampled forms are
// identical across platforms and standard libraries.
//
//   uniform01:  (x >> 11) * 2^-53
//   integer in [lo, hi]:  lo + x mod (hi - lo + 1)
//   dyadic coefficient:  round(u * 2^16) / 2^16 with u uniform in [-1, 1)

/// SplitMix64 finalizer; used to hash lattice positions for lazily evaluated
/// random potentials.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr double to_unit_interval(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Uniform [0, 1) value attached to (seed, k, s, tag) without any state.
constexpr double hashed_uniform(std::uint64_t seed, Coord k, Coord s, std::uint64_t tag) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(k));
  h = splitmix64(h ^ static_cast<std::uint64_t>(s));
  h = splitmix64(h ^ tag);
  return to_unit_interval(h);
}

/**
 * Seeded generator of random chains and cochains for property checks.
 *
 * Supports are drawn uniformly from the box |k|,|s| <= radius. With
 * `dyadic` set, coefficients are multiples of 2^-16 in [-1, 1], which makes
 * every finite sum of pairwise products exactly representable; identities
 * that hold symbolically then hold bit-for-bit.
 */
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return to_unit_interval(engine_()); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  Coord integer(Coord lo, Coord hi) {
    if (hi < lo) throw std::invalid_argument("empty integer range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Coord>(engine_() % span);
  }

  double real_coefficient(bool dyadic) {
    const double u = uniform(-1.0, 1.0);
    return dyadic ? std::round(u * 65536.0) / 65536.0 : u;
  }
  Complex coefficient(bool dyadic) {
    const double re = real_coefficient(dyadic);
    const double im = real_coefficient(dyadic);
    return {re, im};
  }

  Cell cell(int grade, Coord radius) {
    const Coord k = integer(-radius, radius);
    const Coord s = integer(-radius, radius);
    Channel ch = Channel::none;
    if (grade == 1) ch = integer(0, 1) == 0 ? Channel::e1 : Channel::e2;
    return {k, s, ch};
  }

  /// Up to `terms` random entries (coincident draws merge).
  Cochain cochain(int grade, Coord radius, int terms, bool dyadic = false) {
    Cochain f(grade);
    for (int i = 0; i < terms; ++i) {
      const Cell c = cell(grade, radius);
      f.add(c, coefficient(dyadic));
    }
    return f;
  }

  Chain chain(int grade, Coord radius, int terms, bool dyadic = false) {
    Chain a(grade);
    for (int i = 0; i < terms; ++i) {
      const Cell c = cell(grade, radius);
      a.add(c, real_coefficient(dyadic));
    }
    return a;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dezin

#endif  // DEZIN_RANDOM_HPP
