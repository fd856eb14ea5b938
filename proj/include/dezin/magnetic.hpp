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

#ifndef DEZIN_MAGNETIC_HPP
#define DEZIN_MAGNETIC_HPP

#include <algorithm>
#include <set>

#include "dezin/calculus.hpp"
#include "dezin/potentials.hpp"

namespace dezin {

namespace detail {

inline void require_grade(const Cochain& f, int grade) {
  if (f.grade() != grade) throw GradeMismatch(f.grade(), grade);
}

constexpr Complex kI{0.0, 1.0};

}  // namespace detail

/// A phi = phi u A: multiplication of a 0-form by the magnetic potential.
inline Cochain mult_A(const Cochain& phi, const MagneticPotential& A) {
  detail::require_grade(phi, 0);
  Cochain out(1);
  for (const auto& [cell, c] : phi) {
    const auto [a1, a2] = A(cell.k, cell.s);
    out.add({cell.k, cell.s, Channel::e1}, c * a1);
    out.add({cell.k, cell.s, Channel::e2}, c * a2);
  }
  return out;
}

/// A* w = sum (A1 u + A2 v) x, the formal adjoint of `mult_A`.
inline Cochain adjoint_A(const Cochain& w, const MagneticPotential& A) {
  detail::require_grade(w, 1);
  Cochain out(0);
  for (const auto& [cell, c] : w) out.add({cell.k, cell.s}, A.on_edge(cell) * c);
  return out;
}

/// d_A phi = d phi + i phi u A. The coupling is additive, not a phase.
inline Cochain deformed_d(const Cochain& phi, const MagneticPotential& A) {
  detail::require_grade(phi, 0);
  return d(phi) + detail::kI * mult_A(phi, A);
}

/// delta_A w = delta w - i A* w, the formal adjoint of `deformed_d`.
inline Cochain deformed_codiff(const Cochain& w, const MagneticPotential& A) {
  detail::require_grade(w, 1);
  return codifferential(w) - detail::kI * adjoint_A(w, A);
}

/// The nonnegative magnetic Laplacian -Delta_A = delta_A d_A on 0-forms.
inline Cochain magnetic_laplacian(const Cochain& phi, const MagneticPotential& A) {
  return deformed_codiff(deformed_d(phi, A), A);
}

/// Same operator through the four-term expansion
/// -Delta phi - i A* d phi + i delta(A phi) + A* A phi.
inline Cochain magnetic_laplacian_expanded(const Cochain& phi, const MagneticPotential& A) {
  detail::require_grade(phi, 0);
  const Cochain a_phi = mult_A(phi, A);
  Cochain out = laplacian(phi);
  out -= detail::kI * adjoint_A(d(phi), A);
  out += detail::kI * codifferential(a_phi);
  out += adjoint_A(a_phi, A);
  return out;
}

/// V restricted to the support of `phi`, as a 0-form.
inline Cochain electric_form_on(const ElectricPotential& V, const Cochain& phi) {
  Cochain out(0);
  for (const auto& [cell, c] : phi) out.add({cell.k, cell.s}, V(cell.k, cell.s));
  return out;
}

/// H_{A,V} phi = -Delta_A phi + V u phi.
inline Cochain schrodinger_apply(const Cochain& phi, const MagneticPotential& A,
                                 const ElectricPotential& V) {
  detail::require_grade(phi, 0);
  return magnetic_laplacian(phi, A) + cup(electric_form_on(V, phi), phi);
}

// ---------------------------------------------------------------------------
// Product rules for the deformed codifferential.

/// Which closed-form right-hand side to evaluate. `printed` is the closed
/// form as originally stated; `corrected` is the form that matches the
/// operator composition (see README, "Product-rule findings").
enum class FormulaVariant { printed, corrected };

/**
 * Closed form of delta_A(w u phi):
 *
 *   delta w u phi - sum (u' Dk phi(k,s) + v' Ds phi(k,s)) x
 *                 - i sum (A1 u phi(k+1,s) + A2 v phi(k,s+1)) x
 *
 * where u' = u(k-1,s), v' = v(k,s-1) in the printed variant and
 * u' = u(k,s), v' = v(k,s) in the corrected one.
 */
inline Cochain leibniz_omega_phi_rhs(const Cochain& w, const Cochain& phi,
                                     const MagneticPotential& A,
                                     FormulaVariant variant = FormulaVariant::printed) {
  detail::require_grade(w, 1);
  detail::require_grade(phi, 0);
  Cochain out = cup(codifferential(w), phi);
  const bool printed = variant == FormulaVariant::printed;
  for (const auto& [cell, c] : w) {
    const auto [k, s, ch] = cell;
    const bool horizontal = ch == Channel::e1;
    // Point where the difference term lands and its forward neighbour.
    const Coord pk = printed && horizontal ? tau(k) : k;
    const Coord ps = printed && !horizontal ? tau(s) : s;
    const Complex next = horizontal ? phi.at(tau(pk), ps) : phi.at(pk, tau(ps));
    out.add({pk, ps}, -c * (next - phi.at(pk, ps)));

    const Complex shifted = horizontal ? phi.at(tau(k), s) : phi.at(k, tau(s));
    out.add({k, s}, -detail::kI * A.on_edge(cell) * c * shifted);
  }
  return out;
}

/**
 * Closed form of delta_A(phi u w):
 *
 *   phi u delta_A w - sum (Dk phi(k-1,s) u(k-1,s) + Ds phi(k,s-1) v(k,s-1)) x
 */
inline Cochain leibniz_phi_omega_rhs(const Cochain& w, const Cochain& phi,
                                     const MagneticPotential& A) {
  detail::require_grade(w, 1);
  detail::require_grade(phi, 0);
  Cochain out = cup(phi, deformed_codiff(w, A));
  for (const auto& [cell, c] : w) {
    const auto [k, s, ch] = cell;
    const Coord pk = ch == Channel::e1 ? tau(k) : k;
    const Coord ps = ch == Channel::e2 ? tau(s) : s;
    out.add({pk, ps}, -(phi.at(pk, ps) - phi.at(k, s)) * c);
  }
  return out;
}

struct LeibnizResiduals {
  double omega_phi = 0.0;  // || delta_A(w u phi) - closed form ||
  double phi_omega = 0.0;  // || delta_A(phi u w) - closed form ||
};

inline LeibnizResiduals leibniz_residuals(const Cochain& w, const Cochain& phi,
                                          const MagneticPotential& A,
                                          FormulaVariant variant = FormulaVariant::printed) {
  LeibnizResiduals r;
  r.omega_phi = norm(deformed_codiff(cup(w, phi), A) - leibniz_omega_phi_rhs(w, phi, A, variant));
  r.phi_omega = norm(deformed_codiff(cup(phi, w), A) - leibniz_phi_omega_rhs(w, phi, A));
  return r;
}

// ---------------------------------------------------------------------------
// Remainder of the product rule for the magnetic Laplacian:
//   -Delta_A(phi u psi) = phi u (-Delta_A psi) + (-Delta phi) u psi + Phi.

/// Phi computed as the exact residual of the product rule.
inline Cochain phi_remainder(const Cochain& phi, const Cochain& psi, const MagneticPotential& A) {
  detail::require_grade(phi, 0);
  detail::require_grade(psi, 0);
  Cochain out = magnetic_laplacian(cup(phi, psi), A);
  out -= cup(phi, magnetic_laplacian(psi, A));
  out -= cup(laplacian(phi), psi);
  return out;
}

/**
 * Pointwise closed form of Phi. Every term carries a forward difference of
 * phi, so Phi vanishes wherever phi is locally constant.
 *
 * printed:
 *   Dk phi(k-1,s) (psi(k+1,s) - psi(k-1,s) + i psi(k-1,s) A1(k-1,s))
 *   + i Dk phi(k,s) psi(k-1,s) A1(k,s)
 *   + Ds phi(k,s-1) (psi(k,s+1) - psi(k,s-1) + i psi(k,s-1) A2(k,s-1))
 *   + i Dk phi(k,s) psi(k,s-1) A2(k,s)
 *
 * corrected:
 *   - Dk phi(k,s) (psi(k+1,s) - psi(k,s)) - i A1(k,s) Dk phi(k,s) psi(k+1,s)
 *   - Dk phi(k-1,s) (psi(k,s) - psi(k-1,s) + i psi(k-1,s) A1(k-1,s))
 *   + the same with (k, Dk, A1) replaced by (s, Ds, A2)
 */
inline Cochain phi_formula(const Cochain& phi, const Cochain& psi, const MagneticPotential& A,
                           FormulaVariant variant) {
  detail::require_grade(phi, 0);
  detail::require_grade(psi, 0);
  const Complex i = detail::kI;
  auto dk = [&](Coord k, Coord s) { return phi.at(tau(k), s) - phi.at(k, s); };
  auto ds = [&](Coord k, Coord s) { return phi.at(k, tau(s)) - phi.at(k, s); };
  auto p = [&](Coord k, Coord s) { return psi.at(k, s); };

  std::set<LatticeIndex> points;
  for (const auto& [cell, c] : phi) {
    for (Coord dk_ = -1; dk_ <= 1; ++dk_) {
      for (Coord ds_ = -1; ds_ <= 1; ++ds_) points.insert({cell.k + dk_, cell.s + ds_});
    }
  }

  Cochain out(0);
  for (const auto& [k, s] : points) {
    Complex value;
    if (variant == FormulaVariant::printed) {
      value = dk(sigma(k), s) * (p(tau(k), s) - p(sigma(k), s) +
                                 i * p(sigma(k), s) * A.a1(sigma(k), s)) +
              i * dk(k, s) * p(sigma(k), s) * A.a1(k, s) +
              ds(k, sigma(s)) * (p(k, tau(s)) - p(k, sigma(s)) +
                                 i * p(k, sigma(s)) * A.a2(k, sigma(s))) +
              i * dk(k, s) * p(k, sigma(s)) * A.a2(k, s);
    } else {
      value = -dk(k, s) * (p(tau(k), s) - p(k, s)) - i * A.a1(k, s) * dk(k, s) * p(tau(k), s) -
              dk(sigma(k), s) * (p(k, s) - p(sigma(k), s) +
                                 i * p(sigma(k), s) * A.a1(sigma(k), s)) -
              ds(k, s) * (p(k, tau(s)) - p(k, s)) - i * A.a2(k, s) * ds(k, s) * p(k, tau(s)) -
              ds(k, sigma(s)) * (p(k, s) - p(k, sigma(s)) +
                                 i * p(k, sigma(s)) * A.a2(k, sigma(s)));
    }
    out.add({k, s}, value);
  }
  return out;
}

struct PhiExpansion {
  Cochain phi{0};                 // exact remainder
  double printed_deviation = 0.0;  // || exact - printed closed form ||
};

inline PhiExpansion phi_expansion(const Cochain& phi, const Cochain& psi,
                                  const MagneticPotential& A) {
  PhiExpansion out;
  out.phi = phi_remainder(phi, psi, A);
  out.printed_deviation = norm(out.phi - phi_formula(phi, psi, A, FormulaVariant::printed));
  return out;
}

// ---------------------------------------------------------------------------
// Cutoff identity:
//   (H(chi u psi), chi u psi)_N = (chi u H psi, chi u psi)_N,  chi = cutoff(N+1).

struct LemmaResidual {
  double residual = 0.0;
  double scale = 1.0;  // magnitude bound of the compared inner products, >= 1
};

inline LemmaResidual lemma_identity_residual(const Cochain& psi, const MagneticPotential& A,
                                             const ElectricPotential& V, Coord n) {
  if (n < 1) throw std::invalid_argument("cutoff identity needs N >= 1");
  const Window box = Window::box(n);
  const Cochain chi = cutoff(tau(n));
  const Cochain cut_psi = cup(chi, psi);
  const Cochain h_cut = schrodinger_apply(cut_psi, A, V);
  const Cochain cut_h = cup(chi, schrodinger_apply(psi, A, V));

  const Complex lhs = inner_product(h_cut, cut_psi, box);
  const Complex rhs = inner_product(cut_h, cut_psi, box);
  const double psi_norm = norm(cut_psi, box);
  LemmaResidual r;
  r.residual = std::abs(lhs - rhs);
  r.scale = std::max(1.0, (norm(h_cut, box) + norm(cut_h, box)) * psi_norm);
  return r;
}

}  // namespace dezin

#endif  // DEZIN_MAGNETIC_HPP
