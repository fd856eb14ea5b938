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

#ifndef DEZIN_SPECTRAL_HPP
#define DEZIN_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dezin/magnetic.hpp"

namespace dezin {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Complex value;
};

/// Thrown when an operator handed to an eigensolver is not Hermitian.
class NotHermitian : public std::domain_error {
 public:
  explicit NotHermitian(double defect)
      : std::domain_error("matrix is not Hermitian (max |M - M^H| = " + std::to_string(defect) +
                          ")") {}
};

/**
 * Finite truncation of H_{A,V} to the box |k|,|s| <= N with zero extension
 * outside. Sites are numbered row-major: index(k,s) = (k+N)(2N+1) + (s+N).
 * Entries are kept as coordinate triplets sorted by (row, col).
 */
class HermitianOperator {
 public:
  HermitianOperator(Coord radius, std::vector<Triplet> triplets)
      : radius_(radius), triplets_(std::move(triplets)) {
    if (radius < 0) throw std::invalid_argument("window radius must be >= 0");
    const std::size_t n = dim();
    for (const auto& t : triplets_) {
      if (t.row >= n || t.col >= n) throw std::out_of_range("triplet outside matrix");
    }
    std::sort(triplets_.begin(), triplets_.end(), [](const Triplet& a, const Triplet& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
  }

  Coord radius() const { return radius_; }
  Window window() const { return Window::box(radius_); }
  Coord side() const { return 2 * radius_ + 1; }
  std::size_t dim() const { return static_cast<std::size_t>(side() * side()); }
  const std::vector<Triplet>& triplets() const { return triplets_; }

  std::size_t index_of(Coord k, Coord s) const {
    return static_cast<std::size_t>((k + radius_) * side() + (s + radius_));
  }
  LatticeIndex site(std::size_t i) const {
    const auto m = static_cast<std::size_t>(side());
    return {static_cast<Coord>(i / m) - radius_, static_cast<Coord>(i % m) - radius_};
  }

  Eigen::MatrixXcd dense() const {
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& t : triplets_) {
      m(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) += t.value;
    }
    return m;
  }

  std::vector<Complex> apply(std::span<const Complex> x) const {
    if (x.size() != dim()) throw std::invalid_argument("vector length does not match dim");
    std::vector<Complex> y(dim(), Complex(0.0));
    for (const auto& t : triplets_) y[t.row] += t.value * x[t.col];
    return y;
  }

  /// max over entries of |M_ij - conj(M_ji)|.
  double hermiticity_defect() const {
    const Eigen::MatrixXcd m = dense();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
  }

  /// Zero-extends a coefficient vector to a 0-form on the lattice.
  Cochain extend(std::span<const Complex> x) const {
    if (x.size() != dim()) throw std::invalid_argument("vector length does not match dim");
    Cochain f(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto [k, s] = site(i);
      f.add({k, s}, x[i]);
    }
    return f;
  }

  /// Coefficients of a 0-form inside the window; entries outside are dropped.
  std::vector<Complex> restrict(const Cochain& f) const {
    if (f.grade() != 0) throw GradeMismatch(f.grade(), 0);
    std::vector<Complex> x(dim(), Complex(0.0));
    const Window w = window();
    for (const auto& [cell, c] : f) {
      if (w.contains(cell)) x[index_of(cell.k, cell.s)] = c;
    }
    return x;
  }

 private:
  Coord radius_;
  std::vector<Triplet> triplets_;
};

/**
 * Matrix of H_{A,V} on the box of radius `n`. Row (k,s):
 *
 *   diagonal        4 + A1(k,s)^2 + A2(k,s)^2 + V(k,s)
 *   (k+1,s)        -(1 + i A1(k,s))
 *   (k-1,s)        -(1 - i A1(k-1,s))
 *   (k,s+1)        -(1 + i A2(k,s))
 *   (k,s-1)        -(1 - i A2(k,s-1))
 *
 * with neighbours outside the box omitted (Dirichlet truncation).
 */
inline HermitianOperator assemble(const MagneticPotential& A, const ElectricPotential& V,
                                  Coord n) {
  if (n < 0) throw std::invalid_argument("window radius must be >= 0");
  const Window w = Window::box(n);
  const Coord m = 2 * n + 1;
  auto index = [&](Coord k, Coord s) { return static_cast<std::size_t>((k + n) * m + (s + n)); };
  const Complex i{0.0, 1.0};

  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(5 * m * m));
  auto emit = [&](Coord k, Coord s, Coord k2, Coord s2, Complex v) {
    if (w.contains(k2, s2) && v != Complex(0.0)) triplets.push_back({index(k, s), index(k2, s2), v});
  };
  for (Coord k = -n; k <= n; ++k) {
    for (Coord s = -n; s <= n; ++s) {
      const auto [a1, a2] = A(k, s);
      const double a1_left = A.a1(sigma(k), s);
      const double a2_down = A.a2(k, sigma(s));
      emit(k, s, sigma(k), s, -(1.0 - i * a1_left));
      emit(k, s, k, sigma(s), -(1.0 - i * a2_down));
      emit(k, s, k, s, 4.0 + a1 * a1 + a2 * a2 + V(k, s));
      emit(k, s, k, tau(s), -(1.0 + i * a2));
      emit(k, s, tau(k), s, -(1.0 + i * a1));
    }
  }
  return HermitianOperator(n, std::move(triplets));
}

/// Tolerance on |M - M^H| accepted by the eigensolver.
inline constexpr double kHermitianTolerance = 1e-12;

/// The `count` smallest eigenvalues, ascending, from a dense Hermitian solve.
inline std::vector<double> lowest_eigenvalues(const HermitianOperator& op, std::size_t count) {
  if (count < 1 || count > op.dim()) {
    throw std::out_of_range("eigenvalue count " + std::to_string(count) + " outside [1, " +
                            std::to_string(op.dim()) + "]");
  }
  const double defect = op.hermiticity_defect();
  if (defect > kHermitianTolerance) throw NotHermitian(defect);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  return {values.data(), values.data() + count};
}

inline double lowest_eigenvalue(const MagneticPotential& A, const ElectricPotential& V, Coord n) {
  return lowest_eigenvalues(assemble(A, V, n), 1).front();
}

/// min over N = 1..n_max of the smallest truncated eigenvalue: the best lower
/// bound constant for (H phi, phi) >= c |phi|^2 that the tested boxes allow.
inline double semibound_estimate(const MagneticPotential& A, const ElectricPotential& V,
                                 Coord n_max) {
  if (n_max < 1) throw std::invalid_argument("semibound estimate needs N_max >= 1");
  double best = std::numeric_limits<double>::infinity();
  for (Coord n = 1; n <= n_max; ++n) best = std::min(best, lowest_eigenvalue(A, V, n));
  return best;
}

struct KernelReport {
  struct Scale {
    Coord n = 0;
    double lambda_min = 0.0;
    bool positive = false;  // lambda_min >= 1 - margin
  };
  std::vector<Scale> scales;
  double margin = 0.0;

  /// True when every tested truncation is uniformly positive, so H psi = 0
  /// has only the trivial solution there.
  bool trivial() const {
    return std::all_of(scales.begin(), scales.end(), [](const Scale& s) { return s.positive; });
  }
};

/// Checks lambda_min >= 1 - margin on every box N = 1..n_max. The caller is
/// expected to have shifted V so that (H phi, phi) >= |phi|^2; scales where
/// that normalization fails are flagged in the report, not thrown.
inline KernelReport kernel_triviality(const MagneticPotential& A, const ElectricPotential& V,
                                      Coord n_max, double margin) {
  if (n_max < 1) throw std::invalid_argument("kernel check needs N_max >= 1");
  KernelReport report;
  report.margin = margin;
  for (Coord n = 1; n <= n_max; ++n) {
    const double lambda = lowest_eigenvalue(A, V, n);
    report.scales.push_back({n, lambda, lambda >= 1.0 - margin});
  }
  return report;
}

/// Writes `% hermitian dim=<d> N=<N>` followed by one `row col re im` line
/// per stored entry, in row-major order, with round-trip precision.
inline void write_matrix_dump(std::ostream& os, const HermitianOperator& op) {
  os << "% hermitian dim=" << op.dim() << " N=" << op.radius() << '\n';
  const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& t : op.triplets()) {
    os << t.row << ' ' << t.col << ' ' << t.value.real() << ' ' << t.value.imag() << '\n';
  }
  os.precision(old_precision);
}

}  // namespace dezin

#endif  // DEZIN_SPECTRAL_HPP
