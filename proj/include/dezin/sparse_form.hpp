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

#ifndef DEZIN_SPARSE_FORM_HPP
#define DEZIN_SPARSE_FORM_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "dezin/lattice.hpp"

namespace dezin {

using Complex = std::complex<double>;

/**
 * Finitely supported linear combination of basis cells of one fixed degree.
 *
 * Used with real coefficients for chains and with complex coefficients for
 * cochains (discrete forms). The storage is canonical: a coefficient that is
 * exactly zero is never stored, so two forms are equal iff their entry maps
 * are equal. Iteration order is lexicographic in (k, s, channel).
 */
template <class Scalar>
class SparseForm {
 public:
  using scalar_type = Scalar;
  using map_type = std::map<Cell, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  explicit SparseForm(int grade = 0) : grade_(grade) {
    if (!valid_grade(grade)) {
      throw std::invalid_argument("form grade must be 0, 1 or 2, got " +
                                  std::to_string(grade));
    }
  }

  static SparseForm vertex(Coord k, Coord s, Scalar c = Scalar(1)) {
    SparseForm f(0);
    f.add({k, s, Channel::none}, c);
    return f;
  }
  static SparseForm edge1(Coord k, Coord s, Scalar c = Scalar(1)) {
    SparseForm f(1);
    f.add({k, s, Channel::e1}, c);
    return f;
  }
  static SparseForm edge2(Coord k, Coord s, Scalar c = Scalar(1)) {
    SparseForm f(1);
    f.add({k, s, Channel::e2}, c);
    return f;
  }
  static SparseForm face(Coord k, Coord s, Scalar c = Scalar(1)) {
    SparseForm f(2);
    f.add({k, s, Channel::none}, c);
    return f;
  }

  int grade() const { return grade_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const map_type& entries() const { return entries_; }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  /// Coefficient at `cell`; zero when absent.
  Scalar at(const Cell& cell) const {
    auto it = entries_.find(cell);
    return it == entries_.end() ? Scalar(0) : it->second;
  }
  Scalar at(Coord k, Coord s, Channel ch = Channel::none) const {
    return at(Cell{k, s, ch});
  }

  /// Accumulates `c` into `cell`, dropping the entry if it cancels to zero.
  void add(const Cell& cell, Scalar c) {
    check_cell(cell);
    if (c == Scalar(0)) return;
    auto [it, inserted] = entries_.try_emplace(cell, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) entries_.erase(it);
    }
  }

  void set(const Cell& cell, Scalar c) {
    check_cell(cell);
    if (c == Scalar(0)) {
      entries_.erase(cell);
    } else {
      entries_[cell] = c;
    }
  }

  SparseForm& operator+=(const SparseForm& other) {
    require_same_grade(other);
    for (const auto& [cell, c] : other.entries_) add(cell, c);
    return *this;
  }
  SparseForm& operator-=(const SparseForm& other) {
    require_same_grade(other);
    for (const auto& [cell, c] : other.entries_) add(cell, -c);
    return *this;
  }
  SparseForm& operator*=(Scalar c) {
    if (c == Scalar(0)) {
      entries_.clear();
      return *this;
    }
    for (auto it = entries_.begin(); it != entries_.end();) {
      it->second *= c;
      // Underflow can produce a zero product.
      if (it->second == Scalar(0)) {
        it = entries_.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  friend SparseForm operator+(SparseForm a, const SparseForm& b) { return a += b; }
  friend SparseForm operator-(SparseForm a, const SparseForm& b) { return a -= b; }
  friend SparseForm operator-(SparseForm a) { return a *= Scalar(-1); }
  friend SparseForm operator*(Scalar c, SparseForm a) { return a *= c; }
  friend SparseForm operator*(SparseForm a, Scalar c) { return a *= c; }

  friend bool operator==(const SparseForm& a, const SparseForm& b) {
    return a.grade_ == b.grade_ && a.entries_ == b.entries_;
  }

 private:
  void check_cell(const Cell& cell) const {
    if (!channel_matches_grade(grade_, cell.channel)) {
      throw std::invalid_argument("cell channel does not match form grade " +
                                  std::to_string(grade_));
    }
  }
  void require_same_grade(const SparseForm& other) const {
    if (other.grade_ != grade_) throw GradeMismatch(grade_, other.grade_);
  }

  int grade_;
  map_type entries_;
};

/// Real chain of the complex: a combination of vertices, edges or faces.
using Chain = SparseForm<double>;

/// Complex-valued cochain (discrete p-form) with finite support.
using Cochain = SparseForm<Complex>;

/// Real part copy of a cochain as a chain; imaginary parts are dropped.
inline Chain real_part(const Cochain& f) {
  Chain out(f.grade());
  for (const auto& [cell, c] : f) out.add(cell, c.real());
  return out;
}

inline Cochain to_cochain(const Chain& a) {
  Cochain out(a.grade());
  for (const auto& [cell, c] : a) out.add(cell, Complex(c, 0.0));
  return out;
}

}  // namespace dezin

#endif  // DEZIN_SPARSE_FORM_HPP
