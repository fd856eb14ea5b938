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

#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dezin/random.hpp"
#include "dezin/spectral.hpp"
#include "oracles.hpp"

namespace dezin {
namespace {

std::vector<Complex> random_vector(FormSampler& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& x : v) x = rng.coefficient(false);
  return v;
}

double vec_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

TEST(Assemble, SingleSiteWithoutFields) {
  const auto op = assemble(MagneticPotential::zero(), ElectricPotential::zero(), 0);
  ASSERT_EQ(op.dim(), 1u);
  ASSERT_EQ(op.triplets().size(), 1u);
  EXPECT_EQ(op.triplets()[0].value, Complex(4.0));
  EXPECT_EQ(lowest_eigenvalues(op, 1), std::vector<double>{4.0});
}

TEST(Assemble, RowMajorOrdering) {
  const auto op = assemble(MagneticPotential::zero(), ElectricPotential::zero(), 2);
  EXPECT_EQ(op.dim(), 25u);
  EXPECT_EQ(op.index_of(-2, -2), 0u);
  EXPECT_EQ(op.index_of(-2, -1), 1u);
  EXPECT_EQ(op.index_of(-1, -2), 5u);
  EXPECT_EQ(op.index_of(2, 2), 24u);
  for (std::size_t i = 0; i < op.dim(); ++i) {
    const auto [k, s] = op.site(i);
    EXPECT_EQ(op.index_of(k, s), i);
  }
}

TEST(Assemble, HermitianAndMatchesOperatorApplication) {
  FormSampler rng(1);
  for (Coord n = 0; n <= 6; ++n) {
    const auto A = MagneticPotential::random(rng.engine()(), 2.0);
    const auto V = ElectricPotential::random_bounded_below(rng.engine()(), -2.0, 5.0);
    const auto op = assemble(A, V, n);
    EXPECT_LE(op.hermiticity_defect(), 1e-12);
    for (int t = 0; t < 50; ++t) {
      const auto x = random_vector(rng, op.dim());
      const auto y = op.apply(x);
      const auto z = op.restrict(schrodinger_apply(op.extend(x), A, V));
      double diff = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) diff += std::norm(y[i] - z[i]);
      EXPECT_LE(std::sqrt(diff), 1e-12 * std::max(1.0, vec_norm(y)));
    }
  }
}

TEST(Assemble, PatternIsSymmetric) {
  const auto op = assemble(MagneticPotential::landau(0.7), ElectricPotential::harmonic(0.2), 3);
  std::set<std::pair<std::size_t, std::size_t>> pattern;
  for (const auto& t : op.triplets()) pattern.insert({t.row, t.col});
  for (const auto& [r, c] : pattern) EXPECT_TRUE(pattern.contains({c, r}));
  // Entrywise conjugate symmetry holds exactly for this construction.
  const auto m = op.dense();
  EXPECT_EQ((m - m.adjoint()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Assemble, ConstantPotentialShiftsDiagonal) {
  const double c = 3.25;
  const auto base = assemble(MagneticPotential::zero(), ElectricPotential::zero(), 3).dense();
  const auto shifted = assemble(MagneticPotential::zero(), ElectricPotential::constant(c), 3).dense();
  const Eigen::MatrixXcd expected =
      base + c * Eigen::MatrixXcd::Identity(base.rows(), base.cols());
  EXPECT_EQ((shifted - expected).cwiseAbs().maxCoeff(), 0.0);
}

TEST(LowestEigenvalues, AnalyticDirichletSpectrum) {
  for (Coord n : {1, 3, 5, 7, 10}) {
    const int m = static_cast<int>(2 * n + 1);
    const auto op = assemble(MagneticPotential::zero(), ElectricPotential::zero(), n);
    const auto got = lowest_eigenvalues(op, op.dim());
    const auto expected = oracle::dirichlet_spectrum(m);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_LE(std::abs(got[i] - expected[i]), 1e-9 * std::abs(expected[i])) << "m=" << m;
    }
  }
}

TEST(LowestEigenvalues, ConstantShiftMovesEverything) {
  const auto A = MagneticPotential::random(3, 1.0);
  const auto V = ElectricPotential::harmonic(0.05);
  const auto base = lowest_eigenvalues(assemble(A, V, 3), 10);
  const auto moved = lowest_eigenvalues(assemble(A, V.shifted(-1.5), 3), 10);
  for (std::size_t i = 0; i < base.size(); ++i) EXPECT_NEAR(moved[i] - base[i], -1.5, 1e-12);
}

TEST(LowestEigenvalues, ArgumentErrors) {
  const auto op = assemble(MagneticPotential::zero(), ElectricPotential::zero(), 1);
  EXPECT_THROW(lowest_eigenvalues(op, 0), std::out_of_range);
  EXPECT_THROW(lowest_eigenvalues(op, 10), std::out_of_range);
  EXPECT_NO_THROW(lowest_eigenvalues(op, 9));

  std::vector<Triplet> skew{{0, 1, Complex(1.0, 0.0)}, {1, 0, Complex(2.0, 0.0)}};
  const HermitianOperator broken(1, skew);
  EXPECT_THROW(lowest_eigenvalues(broken, 1), NotHermitian);
}

TEST(LowestEigenvalues, DomainMonotonicity) {
  FormSampler rng(5);
  for (int t = 0; t < 5; ++t) {
    const auto A = MagneticPotential::random(rng.engine()(), 1.5);
    const auto V = ElectricPotential::random_bounded_below(rng.engine()(), -1.0, 4.0);
    double previous = lowest_eigenvalue(A, V, 0);
    for (Coord n = 1; n <= 6; ++n) {
      const double current = lowest_eigenvalue(A, V, n);
      EXPECT_LE(current, previous + 1e-12);
      previous = current;
    }
  }
}

TEST(Semibound, MagneticLaplacianIsNonnegative) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EXPECT_GE(semibound_estimate(MagneticPotential::random(seed, 2.0), ElectricPotential::zero(), 5),
              -1e-12);
  }
}

TEST(Semibound, ConstantPotentialApproachesFloorFromAbove) {
  const double c = -0.75;
  const auto V = ElectricPotential::constant(c);
  const double coarse = semibound_estimate(MagneticPotential::zero(), V, 1);
  const double fine = semibound_estimate(MagneticPotential::zero(), V, 6);
  EXPECT_GE(fine, c);
  EXPECT_LE(fine, coarse);
  EXPECT_LT(fine - c, coarse - c);
  // Smallest analytic eigenvalue on the 13 x 13 box.
  EXPECT_NEAR(fine - c, oracle::dirichlet_spectrum(13).front(), 1e-9);
  EXPECT_THROW(semibound_estimate(MagneticPotential::zero(), V, 0), std::invalid_argument);
}

TEST(Semibound, HarmonicTrapIsNonnegative) {
  EXPECT_GE(semibound_estimate(MagneticPotential::zero(), ElectricPotential::harmonic(0.5), 5), 0.0);
}

TEST(Semibound, NonIncreasingInScale) {
  const auto A = MagneticPotential::random(9, 1.0);
  const auto V = ElectricPotential::random_bounded_below(2, -2.0, 3.0);
  double previous = semibound_estimate(A, V, 1);
  for (Coord n = 2; n <= 5; ++n) {
    const double current = semibound_estimate(A, V, n);
    EXPECT_LE(current, previous);
    previous = current;
  }
}

TEST(Kernel, ShiftedOperatorsAreUniformlyPositive) {
  const auto V = ElectricPotential::constant(1.0);
  const auto without_field = kernel_triviality(MagneticPotential::zero(), V, 6, 1e-12);
  EXPECT_TRUE(without_field.trivial());
  EXPECT_EQ(without_field.scales.size(), 6u);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto report = kernel_triviality(MagneticPotential::random(seed, 2.0), V, 6, 1e-12);
    EXPECT_TRUE(report.trivial());
    for (const auto& s : report.scales) EXPECT_GE(s.lambda_min, 1.0 - 1e-12);
  }
}

TEST(Kernel, DeepWellBreaksNormalization) {
  const auto V = ElectricPotential::from_rule(
      [](Coord k, Coord s) { return k == 0 && s == 0 ? -10.0 : 1.0; }, -10.0, "well");
  const auto report = kernel_triviality(MagneticPotential::zero(), V, 4, 1e-12);
  EXPECT_FALSE(report.trivial());
  for (const auto& s : report.scales) EXPECT_FALSE(s.positive) << "N=" << s.n;
}

TEST(MatrixDump, HeaderAndTriplets) {
  const auto op = assemble(MagneticPotential::constant(0.5, -0.25), ElectricPotential::zero(), 1);
  std::ostringstream os;
  write_matrix_dump(os, op);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "% hermitian dim=9 N=1");
  std::size_t row = 0, col = 0;
  double re = 0.0, im = 0.0;
  std::size_t lines = 0;
  std::pair<std::size_t, std::size_t> last{0, 0};
  while (in >> row >> col >> re >> im) {
    const auto& t = op.triplets()[lines];
    EXPECT_EQ(row, t.row);
    EXPECT_EQ(col, t.col);
    EXPECT_EQ(re, t.value.real());  // round-trip precision
    EXPECT_EQ(im, t.value.imag());
    if (lines > 0) EXPECT_LT(last, std::make_pair(row, col));
    last = {row, col};
    ++lines;
  }
  EXPECT_EQ(lines, op.triplets().size());
}

}  // namespace
}  // namespace dezin
