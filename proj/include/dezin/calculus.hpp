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

#ifndef DEZIN_CALCULUS_HPP
#define DEZIN_CALCULUS_HPP

#include "dezin/forms.hpp"

namespace dezin {

/**
 * Coboundary d: K^p -> K^(p+1), the dual of `boundary` under `pair`.
 *
 *   (d phi)_e1(k,s) = phi(k+1,s) - phi(k,s)
 *   (d phi)_e2(k,s) = phi(k,s+1) - phi(k,s)
 *   (d w)(k,s)      = v(k+1,s) - v(k,s) - u(k,s+1) + u(k,s)
 *
 * A 2-form has no coboundary in the planar complex; the zero 2-form is
 * returned for it.
 */
inline Cochain d(const Cochain& a) {
  switch (a.grade()) {
    case 0: {
      Cochain out(1);
      for (const auto& [cell, c] : a) {
        const auto [k, s, ch] = cell;
        out.add({k, s, Channel::e1}, -c);
        out.add({sigma(k), s, Channel::e1}, c);
        out.add({k, s, Channel::e2}, -c);
        out.add({k, sigma(s), Channel::e2}, c);
      }
      return out;
    }
    case 1: {
      Cochain out(2);
      for (const auto& [cell, c] : a) {
        const auto [k, s, ch] = cell;
        if (ch == Channel::e1) {
          out.add({k, s}, c);
          out.add({k, sigma(s)}, -c);
        } else {
          out.add({sigma(k), s}, c);
          out.add({k, s}, -c);
        }
      }
      return out;
    }
    default:
      return Cochain(2);
  }
}

/**
 * Cup product. Nonzero basis products:
 *
 *   x(k,s) u x(k,s) = x(k,s)
 *   x(k,s) u e_i(k,s) = e_i(k,s),   e1(k,s) u x(k+1,s) = e1(k,s),
 *                                    e2(k,s) u x(k,s+1) = e2(k,s)
 *   x(k,s) u F(k,s) = F(k,s) u x(k+1,s+1) = e1(k,s) u e2(k+1,s) = F(k,s)
 *   e2(k,s) u e1(k,s+1) = -F(k,s)
 *
 * The product is not commutative. Degrees summing past 2 give the zero 2-form.
 */
inline Cochain cup(const Cochain& a, const Cochain& b) {
  const int p = a.grade();
  const int q = b.grade();
  if (p + q > 2) return Cochain(2);
  Cochain out(p + q);
  for (const auto& [cell, c] : a) {
    const auto [k, s, ch] = cell;
    if (p == 0 && q == 0) {
      out.add({k, s}, c * b.at(k, s));
    } else if (p == 0 && q == 1) {
      out.add({k, s, Channel::e1}, c * b.at(k, s, Channel::e1));
      out.add({k, s, Channel::e2}, c * b.at(k, s, Channel::e2));
    } else if (p == 1 && q == 0) {
      const Complex other = ch == Channel::e1 ? b.at(tau(k), s) : b.at(k, tau(s));
      out.add(cell, c * other);
    } else if (p == 0 && q == 2) {
      out.add({k, s}, c * b.at(k, s));
    } else if (p == 2 && q == 0) {
      out.add({k, s}, c * b.at(tau(k), tau(s)));
    } else {  // p == 1 && q == 1
      if (ch == Channel::e1) {
        out.add({k, s}, c * b.at(tau(k), s, Channel::e2));
      } else {
        out.add({k, s}, -c * b.at(k, tau(s), Channel::e1));
      }
    }
  }
  return out;
}

/// Hodge star: x(k,s) -> F(k,s), e1(k,s) -> e2(k+1,s), e2(k,s) -> -e1(k,s+1),
/// F(k,s) -> x(k+1,s+1). Chosen so that eps u *eps = F(k,s) on every basis
/// element eps at (k,s).
inline Cochain star(const Cochain& a) {
  Cochain out(2 - a.grade());
  for (const auto& [cell, c] : a) {
    const auto [k, s, ch] = cell;
    switch (a.grade()) {
      case 0:
        out.add({k, s}, c);
        break;
      case 1:
        if (ch == Channel::e1) {
          out.add({tau(k), s, Channel::e2}, c);
        } else {
          out.add({k, tau(s), Channel::e1}, -c);
        }
        break;
      case 2:
        out.add({tau(k), tau(s)}, c);
        break;
    }
  }
  return out;
}

/// Two-sided inverse of `star`.
inline Cochain star_inv(const Cochain& a) {
  Cochain out(2 - a.grade());
  for (const auto& [cell, c] : a) {
    const auto [k, s, ch] = cell;
    switch (a.grade()) {
      case 0:
        out.add({sigma(k), sigma(s)}, c);
        break;
      case 1:
        if (ch == Channel::e2) {
          out.add({sigma(k), s, Channel::e1}, c);
        } else {
          out.add({k, sigma(s), Channel::e2}, -c);
        }
        break;
      case 2:
        out.add({k, s}, c);
        break;
    }
  }
  return out;
}

/**
 * Codifferential, the formal adjoint of `d` for the l2 pairing of forms:
 * on a q-form, delta = (-1)^q *^-1 d *. Zero on 0-forms.
 */
inline Cochain codifferential(const Cochain& b) {
  if (b.grade() == 0) return Cochain(0);
  Cochain out = star_inv(d(star(b)));
  if (b.grade() % 2 == 1) out *= -1.0;
  return out;
}

/// Difference-stencil form of the codifferential on 1-forms:
/// (delta w)(k,s) = -(u(k,s) - u(k-1,s)) - (v(k,s) - v(k,s-1)).
inline Cochain codifferential_stencil(const Cochain& w) {
  if (w.grade() != 1) throw GradeMismatch(w.grade(), 1);
  Cochain out(0);
  for (const auto& [cell, c] : w) {
    const auto [k, s, ch] = cell;
    out.add({k, s}, -c);
    if (ch == Channel::e1) {
      out.add({tau(k), s}, c);
    } else {
      out.add({k, tau(s)}, c);
    }
  }
  return out;
}

/// The nonnegative Laplacian -Delta = delta d + d delta. On 0-forms this is
/// the 5-point stencil 4 phi(k,s) minus the four neighbours.
inline Cochain laplacian(const Cochain& a) {
  Cochain out(a.grade());
  if (a.grade() < 2) out += codifferential(d(a));
  if (a.grade() > 0) out += d(codifferential(a));
  return out;
}

}  // namespace dezin

#endif  // DEZIN_CALCULUS_HPP
