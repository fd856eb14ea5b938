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

#ifndef DEZIN_CHAIN_HPP
#define DEZIN_CHAIN_HPP

#include "dezin/sparse_form.hpp"

namespace dezin {

/**
 * Boundary operator on chains.
 *
 *   dx = 0,  de1(k,s) = x(k+1,s) - x(k,s),  de2(k,s) = x(k,s+1) - x(k,s),
 *   dF(k,s) = e1(k,s) + e2(k+1,s) - e1(k,s+1) - e2(k,s).
 *
 * A grade-0 chain maps to the zero 0-chain.
 */
inline Chain boundary(const Chain& a) {
  if (a.grade() == 0) return Chain(0);
  Chain out(a.grade() - 1);
  for (const auto& [cell, c] : a) {
    const auto [k, s, ch] = cell;
    switch (a.grade()) {
      case 1:
        if (ch == Channel::e1) {
          out.add({tau(k), s}, c);
        } else {
          out.add({k, tau(s)}, c);
        }
        out.add({k, s}, -c);
        break;
      case 2:
        out.add({k, s, Channel::e1}, c);
        out.add({tau(k), s, Channel::e2}, c);
        out.add({k, tau(s), Channel::e1}, -c);
        out.add({k, s, Channel::e2}, -c);
        break;
    }
  }
  return out;
}

/// Bilinear chain/cochain pairing; basis elements pair by Kronecker delta.
inline Complex pair(const Chain& a, const Cochain& alpha) {
  if (a.grade() != alpha.grade()) throw GradeMismatch(a.grade(), alpha.grade());
  Complex sum = 0.0;
  for (const auto& [cell, c] : a) {
    sum += c * alpha.at(cell);
  }
  return sum;
}

}  // namespace dezin

#endif  // DEZIN_CHAIN_HPP
