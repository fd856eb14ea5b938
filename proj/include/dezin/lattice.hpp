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

#ifndef DEZIN_LATTICE_HPP
#define DEZIN_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dezin {

using Coord = std::int64_t;

/// Address (k, s) of a basis cell of the planar complex.
struct LatticeIndex {
  Coord k = 0;
  Coord s = 0;

  auto operator<=>(const LatticeIndex&) const = default;
};

// Shift maps on the index set: tau raises an index by one, sigma lowers it.
constexpr Coord tau(Coord i) { return i + 1; }
constexpr Coord sigma(Coord i) { return i - 1; }

/// Orientation channel of a cell. Vertices and faces carry `none`; edges are
/// either horizontal (`e1`, along k) or vertical (`e2`, along s).
enum class Channel : std::uint8_t { none = 0, e1 = 1, e2 = 2 };

/// Key of a basis element: a lattice position plus the edge channel.
struct Cell {
  Coord k = 0;
  Coord s = 0;
  Channel channel = Channel::none;

  constexpr LatticeIndex index() const { return {k, s}; }

  auto operator<=>(const Cell&) const = default;
};

/// Thrown when two operands of an operation live in incompatible degrees.
class GradeMismatch : public std::invalid_argument {
 public:
  GradeMismatch(int lhs, int rhs)
      : std::invalid_argument("incompatible grades: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

/// True when `channel` is legal for a cell of dimension `grade`.
constexpr bool channel_matches_grade(int grade, Channel channel) {
  if (grade == 1) return channel == Channel::e1 || channel == Channel::e2;
  return channel == Channel::none;
}

constexpr bool valid_grade(int grade) { return grade >= 0 && grade <= 2; }

}  // namespace dezin

#endif  // DEZIN_LATTICE_HPP
