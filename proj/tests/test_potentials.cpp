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

#include <gtest/gtest.h>

#include "dezin/potentials.hpp"

namespace dezin {
namespace {

TEST(MagneticPresets, ParseAndEvaluate) {
  EXPECT_EQ(parse_magnetic_preset("zero")(3, -4), (MagneticPotential::Components{0.0, 0.0}));
  EXPECT_EQ(parse_magnetic_preset("zero()")(1, 1), (MagneticPotential::Components{0.0, 0.0}));
  EXPECT_EQ(parse_magnetic_preset("constant(1.5, -2)")(7, 7),
            (MagneticPotential::Components{1.5, -2.0}));
  const auto landau = parse_magnetic_preset("landau(0.5)");
  EXPECT_EQ(landau(4, 9), (MagneticPotential::Components{0.0, 2.0}));
  const auto sym = parse_magnetic_preset(" symmetric( 2 ) ");
  EXPECT_EQ(sym(3, 5), (MagneticPotential::Components{-5.0, 3.0}));
}

TEST(MagneticPresets, UniformCurl) {
  // Circulation around every plaquette equals the field strength.
  for (const auto& A : {MagneticPotential::landau(0.3), MagneticPotential::symmetric(0.3)}) {
    for (Coord k = -5; k <= 5; ++k) {
      for (Coord s = -5; s <= 5; ++s) {
        const double curl = A.a2(k + 1, s) - A.a2(k, s) - A.a1(k, s + 1) + A.a1(k, s);
        EXPECT_NEAR(curl, 0.3, 1e-15);
      }
    }
  }
}

TEST(MagneticPresets, RandomIsDeterministicAndBounded) {
  const auto a = parse_magnetic_preset("random(7, 0.5)");
  const auto b = MagneticPotential::random(7, 0.5);
  const auto c = MagneticPotential::random(8, 0.5);
  bool differs = false;
  for (Coord k = -10; k <= 10; ++k) {
    for (Coord s = -10; s <= 10; ++s) {
      EXPECT_EQ(a(k, s), b(k, s));
      EXPECT_LE(std::abs(a.a1(k, s)), 0.5);
      EXPECT_LE(std::abs(a.a2(k, s)), 0.5);
      differs = differs || a(k, s) != c(k, s);
    }
  }
  EXPECT_TRUE(differs);
}

TEST(MagneticPresets, RejectsBadInput) {
  EXPECT_THROW(parse_magnetic_preset("landau"), std::invalid_argument);
  EXPECT_THROW(parse_magnetic_preset("landau(1,2)"), std::invalid_argument);
  EXPECT_THROW(parse_magnetic_preset("landau(x)"), std::invalid_argument);
  EXPECT_THROW(parse_magnetic_preset("peierls(1)"), std::invalid_argument);
  EXPECT_THROW(parse_magnetic_preset("random(-1, 1)"), std::invalid_argument);
  EXPECT_THROW(parse_magnetic_preset("constant(1, 2"), std::invalid_argument);
}

TEST(MagneticPotential, TableMaterialization) {
  const auto A = MagneticPotential::from_table({{{0, 0}, {1.0, 0.0}}, {{5, 5}, {0.0, 2.0}}});
  EXPECT_EQ(A.as_form(Window::unbounded()).size(), 2u);
  EXPECT_EQ(A.as_form(Window::box(2)).size(), 1u);
  EXPECT_EQ(A.a2(5, 5), 2.0);
  EXPECT_EQ(A.a1(1, 1), 0.0);
  EXPECT_EQ(MagneticPotential::constant(1.0, 0.0).as_form(Window::box(1)).size(), 9u);
  EXPECT_THROW(MagneticPotential::landau(1.0).as_form(Window::unbounded()), std::logic_error);
}

TEST(ElectricPresets, ParseEvaluateAndFloor) {
  EXPECT_EQ(parse_electric_preset("zero")(2, 2), 0.0);
  EXPECT_EQ(parse_electric_preset("constant(-3)")(9, 1), -3.0);
  EXPECT_EQ(parse_electric_preset("constant(-3)").floor(), -3.0);
  const auto h = parse_electric_preset("harmonic(0.5)");
  EXPECT_EQ(h(2, 3), 6.5);
  EXPECT_EQ(h.floor(), 0.0);
  EXPECT_FALSE(parse_electric_preset("harmonic(-1)").floor().has_value());

  const auto r = parse_electric_preset("random-bounded-below(3, -2, 1.5)");
  EXPECT_EQ(r.floor(), -2.0);
  for (Coord k = -8; k <= 8; ++k) {
    for (Coord s = -8; s <= 8; ++s) {
      EXPECT_GE(r(k, s), -2.0);
      EXPECT_LT(r(k, s), -0.5);
    }
  }
  const auto shifted = r.shifted(3.0);
  EXPECT_EQ(shifted.floor(), 1.0);
  EXPECT_EQ(shifted(1, 2), r(1, 2) + 3.0);
}

TEST(ElectricPresets, RejectsBadInput) {
  EXPECT_THROW(parse_electric_preset("constant()"), std::invalid_argument);
  EXPECT_THROW(parse_electric_preset("random-bounded-below(1, 2)"), std::invalid_argument);
  EXPECT_THROW(parse_electric_preset("random-bounded-below(1, 0, -1)"), std::invalid_argument);
  EXPECT_THROW(parse_electric_preset("coulomb(1)"), std::invalid_argument);
}

TEST(ElectricPotential, TableFloorIncludesImplicitZeros) {
  const auto V = ElectricPotential::from_table({{{0, 0}, 2.0}, {{1, 0}, 5.0}});
  EXPECT_EQ(V.floor(), 0.0);
  EXPECT_EQ(V(0, 0), 2.0);
  const auto W = ElectricPotential::from_table({{{0, 0}, -4.0}});
  EXPECT_EQ(W.floor(), -4.0);
}

}  // namespace
}  // namespace dezin
