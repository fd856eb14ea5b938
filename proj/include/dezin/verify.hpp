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

#ifndef DEZIN_VERIFY_HPP
#define DEZIN_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dezin/chain.hpp"
#include "dezin/magnetic.hpp"
#include "dezin/random.hpp"

namespace dezin {

struct VerifyConfig {
  std::uint64_t seed = 42;
  int trials = 200;
  double tolerance = 1e-12;
  Coord radius = 8;   // support box of sampled forms
  int terms = 24;     // entries drawn per sampled form
};

enum class CheckStatus {
  pass,     // residual within tolerance
  fail,     // identity violated
  flagged,  // published closed form disagrees with the operators; informational
};

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "?";
}

struct IdentityResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;  // relative to the magnitude of the compared terms
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::pass;
};

namespace detail {

inline double relative(double residual, double scale) { return residual / std::max(1.0, scale); }

inline double relative_gap(const Cochain& a, const Cochain& b) {
  return relative(norm(a - b), norm(a) + norm(b));
}

/// Runs `trial` `trials` times, each with a fresh sampler, and records the
/// worst residual. `informational` checks report `flagged` instead of `fail`.
inline IdentityResult run_check(const std::string& name, const VerifyConfig& cfg,
                                std::uint64_t salt, bool informational,
                                const std::function<double(FormSampler&, int)>& trial) {
  IdentityResult r{name, cfg.trials, 0.0, cfg.tolerance, CheckStatus::pass};
  for (int t = 0; t < cfg.trials; ++t) {
    FormSampler rng(splitmix64(cfg.seed ^ splitmix64(salt + static_cast<std::uint64_t>(t))));
    r.max_residual = std::max(r.max_residual, trial(rng, t));
  }
  if (!(r.max_residual <= cfg.tolerance)) {
    r.status = informational ? CheckStatus::flagged : CheckStatus::fail;
  }
  return r;
}

inline MagneticPotential sample_magnetic(FormSampler& rng) {
  return MagneticPotential::random(rng.engine()(), rng.uniform(0.1, 2.0));
}

inline ElectricPotential sample_electric(FormSampler& rng) {
  return ElectricPotential::random_bounded_below(rng.engine()(), rng.uniform(-3.0, 0.0),
                                                 rng.uniform(0.0, 4.0));
}

}  // namespace detail

/**
 * Randomized checks of every identity of the operator calculus. Rows named
 * `*-printed` compare a published closed form against the operators; a
 * mismatch there is reported as `flagged` rather than `fail`.
 */
inline std::vector<IdentityResult> run_identity_suites(const VerifyConfig& cfg) {
  using detail::relative;
  using detail::relative_gap;
  const Coord R = cfg.radius;
  const int T = cfg.terms;
  std::vector<IdentityResult> out;

  out.push_back(detail::run_check("boundary-duality", cfg, 1, false, [&](FormSampler& rng, int t) {
    const int p = 1 + t % 2;
    const Chain a = rng.chain(p, R, T, true);
    const Cochain alpha = rng.cochain(p - 1, R + 1, 4 * T, true);
    return std::abs(pair(boundary(a), alpha) - pair(a, d(alpha)));
  }));

  out.push_back(detail::run_check("boundary-squared", cfg, 2, false, [&](FormSampler& rng, int) {
    return norm(to_cochain(boundary(boundary(rng.chain(2, R, T)))));
  }));

  out.push_back(detail::run_check("coboundary-squared", cfg, 3, false, [&](FormSampler& rng, int) {
    return norm(d(d(rng.cochain(0, R, T))));
  }));

  out.push_back(detail::run_check("star-defining", cfg, 4, false, [&](FormSampler& rng, int t) {
    const int p = t % 3;
    const Cell c = rng.cell(p, R);
    Cochain eps(p);
    eps.add(c, 1.0);
    return norm(cup(eps, star(eps)) - Cochain::face(c.k, c.s));
  }));

  out.push_back(detail::run_check("star-inverse", cfg, 5, false, [&](FormSampler& rng, int t) {
    const Cochain a = rng.cochain(t % 3, R, T);
    return relative_gap(star_inv(star(a)), a) + relative_gap(star(star_inv(a)), a);
  }));

  out.push_back(detail::run_check("codifferential-stencil", cfg, 6, false, [&](FormSampler& rng, int) {
    const Cochain w = rng.cochain(1, R, T);
    return relative_gap(codifferential(w), codifferential_stencil(w));
  }));

  out.push_back(detail::run_check("adjoint-d", cfg, 7, false, [&](FormSampler& rng, int t) {
    const int p = t % 2;
    const Cochain a = rng.cochain(p, R, T);
    const Cochain b = rng.cochain(p + 1, R, T);
    const Complex lhs = inner_product(d(a), b);
    const Complex rhs = inner_product(a, codifferential(b));
    return relative(std::abs(lhs - rhs), norm(d(a)) * norm(b) + norm(a) * norm(codifferential(b)));
  }));

  out.push_back(detail::run_check("adjoint-mult-A", cfg, 8, false, [&](FormSampler& rng, int) {
    const auto A = detail::sample_magnetic(rng);
    const Cochain phi = rng.cochain(0, R, T);
    const Cochain w = rng.cochain(1, R, T);
    const Cochain a_phi = mult_A(phi, A);
    const Cochain a_star_w = adjoint_A(w, A);
    return relative(std::abs(inner_product(a_phi, w) - inner_product(phi, a_star_w)),
                    norm(a_phi) * norm(w) + norm(phi) * norm(a_star_w));
  }));

  out.push_back(detail::run_check("adjoint-deformed-d", cfg, 9, false, [&](FormSampler& rng, int) {
    const auto A = detail::sample_magnetic(rng);
    const Cochain phi = rng.cochain(0, R, T);
    const Cochain w = rng.cochain(1, R, T);
    const Cochain dphi = deformed_d(phi, A);
    const Cochain dw = deformed_codiff(w, A);
    return relative(std::abs(inner_product(dphi, w) - inner_product(phi, dw)),
                    norm(dphi) * norm(w) + norm(phi) * norm(dw));
  }));

  out.push_back(
      detail::run_check("magnetic-laplacian-expansion", cfg, 10, false, [&](FormSampler& rng, int) {
        const auto A = detail::sample_magnetic(rng);
        const Cochain phi = rng.cochain(0, R, T);
        return relative_gap(magnetic_laplacian(phi, A), magnetic_laplacian_expanded(phi, A));
      }));

  out.push_back(detail::run_check("magnetic-positivity", cfg, 11, false, [&](FormSampler& rng, int) {
    const auto A = detail::sample_magnetic(rng);
    const Cochain phi = rng.cochain(0, R, T);
    const Complex form = inner_product(magnetic_laplacian(phi, A), phi);
    const double energy = squared_norm(deformed_d(phi, A));
    const double scale = norm(magnetic_laplacian(phi, A)) * norm(phi) + energy;
    return relative(std::abs(form - energy), scale);
  }));

  out.push_back(detail::run_check("schrodinger-symmetry", cfg, 12, false, [&](FormSampler& rng, int) {
    const auto A = detail::sample_magnetic(rng);
    const auto V = detail::sample_electric(rng);
    const Cochain phi = rng.cochain(0, R, T);
    const Cochain psi = rng.cochain(0, R, T);
    const Cochain h_phi = schrodinger_apply(phi, A, V);
    const Cochain h_psi = schrodinger_apply(psi, A, V);
    return relative(std::abs(inner_product(h_phi, psi) - std::conj(inner_product(h_psi, phi))),
                    norm(h_phi) * norm(psi) + norm(h_psi) * norm(phi));
  }));

  auto leibniz = [&](FormulaVariant variant, bool omega_first) {
    return [&, variant, omega_first](FormSampler& rng, int) {
      const auto A = detail::sample_magnetic(rng);
      const Cochain w = rng.cochain(1, R, T);
      const Cochain phi = rng.cochain(0, R, T);
      const Cochain prod = omega_first ? cup(w, phi) : cup(phi, w);
      const Cochain lhs = deformed_codiff(prod, A);
      const Cochain rhs = omega_first ? leibniz_omega_phi_rhs(w, phi, A, variant)
                                      : leibniz_phi_omega_rhs(w, phi, A);
      return relative_gap(lhs, rhs);
    };
  };
  out.push_back(detail::run_check("leibniz-omega-phi-printed", cfg, 13, true,
                                  leibniz(FormulaVariant::printed, true)));
  out.push_back(detail::run_check("leibniz-omega-phi-corrected", cfg, 14, false,
                                  leibniz(FormulaVariant::corrected, true)));
  out.push_back(detail::run_check("leibniz-phi-omega", cfg, 15, false,
                                  leibniz(FormulaVariant::printed, false)));

  out.push_back(detail::run_check("phi-constant-vanishes", cfg, 16, false, [&](FormSampler& rng, int) {
    const auto A = detail::sample_magnetic(rng);
    const Coord box = R + 2;
    const Cochain phi = cutoff(box);
    const Cochain psi = rng.cochain(0, R, T);
    const Cochain remainder = phi_remainder(phi, psi, A);
    return relative(norm(remainder, Window::box(box - 1)), norm(psi));
  }));

  auto phi_check = [&](FormulaVariant variant) {
    return [&, variant](FormSampler& rng, int) {
      const auto A = detail::sample_magnetic(rng);
      const Cochain phi = rng.cochain(0, R, T);
      const Cochain psi = rng.cochain(0, R, T);
      return relative_gap(phi_remainder(phi, psi, A), phi_formula(phi, psi, A, variant));
    };
  };
  out.push_back(detail::run_check("phi-corrected-formula", cfg, 17, false,
                                  phi_check(FormulaVariant::corrected)));
  out.push_back(detail::run_check("phi-printed-formula", cfg, 18, true,
                                  phi_check(FormulaVariant::printed)));

  out.push_back(detail::run_check("lemma-cutoff-identity", cfg, 19, false, [&](FormSampler& rng, int t) {
    const Coord n = 1 + t % 6;
    const auto A = detail::sample_magnetic(rng);
    const auto V = detail::sample_electric(rng);
    const Cochain psi = rng.cochain(0, 2 * n, T);
    const auto r = lemma_identity_residual(psi, A, V, n);
    return r.residual / r.scale;
  }));

  return out;
}

inline bool all_passed(const std::vector<IdentityResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const IdentityResult& r) { return r.status == CheckStatus::fail; });
}

}  // namespace dezin

#endif  // DEZIN_VERIFY_HPP
