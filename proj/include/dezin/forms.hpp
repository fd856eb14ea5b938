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

#ifndef DEZIN_FORMS_HPP
#define DEZIN_FORMS_HPP

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "dezin/sparse_form.hpp"

namespace dezin {

/// Summation domain for inner products: the box |k|,|s| <= N, or everything.
class Window {
 public:
  static Window unbounded() { return Window(); }
  static Window box(Coord n) {
    if (n < 0) throw std::invalid_argument("window radius must be >= 0");
    return Window(n);
  }

  bool is_bounded() const { return radius_.has_value(); }
  Coord radius() const {
    if (!radius_) throw std::logic_error("unbounded window has no radius");
    return *radius_;
  }
  /// Side length 2N+1 of a bounded window.
  Coord side() const { return 2 * radius() + 1; }

  bool contains(Coord k, Coord s) const {
    return !radius_ || (std::abs(k) <= *radius_ && std::abs(s) <= *radius_);
  }
  bool contains(const Cell& c) const { return contains(c.k, c.s); }

 private:
  Window() = default;
  explicit Window(Coord n) : radius_(n) {}

  std::optional<Coord> radius_;
};

/// (a, b)_w = sum over cells in w of a * conj(b). Both edge channels count.
inline Complex inner_product(const Cochain& a, const Cochain& b,
                             const Window& w = Window::unbounded()) {
  if (a.grade() != b.grade()) throw GradeMismatch(a.grade(), b.grade());
  Complex sum = 0.0;
  for (const auto& [cell, c] : a) {
    if (!w.contains(cell)) continue;
    sum += c * std::conj(b.at(cell));
  }
  return sum;
}

inline double squared_norm(const Cochain& a, const Window& w = Window::unbounded()) {
  double sum = 0.0;
  for (const auto& [cell, c] : a) {
    if (w.contains(cell)) sum += std::norm(c);
  }
  return sum;
}

inline double norm(const Cochain& a, const Window& w = Window::unbounded()) {
  return std::sqrt(squared_norm(a, w));
}

/// Indicator 0-form of the box |k|,|s| <= n.
inline Cochain cutoff(Coord n) {
  if (n < 0) throw std::invalid_argument("cutoff radius must be >= 0");
  Cochain chi(0);
  for (Coord k = -n; k <= n; ++k) {
    for (Coord s = -n; s <= n; ++s) chi.add({k, s}, 1.0);
  }
  return chi;
}

/// Drops every entry outside `w`.
inline Cochain restrict_to(const Cochain& a, const Window& w) {
  Cochain out(a.grade());
  for (const auto& [cell, c] : a) {
    if (w.contains(cell)) out.add(cell, c);
  }
  return out;
}

}  // namespace dezin

#endif  // DEZIN_FORMS_HPP
