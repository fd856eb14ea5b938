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

// Lowest eigenvalues of the truncated operator in the Landau gauge for a few
// flux values, next to the zero-field Dirichlet values.

#include <cstdio>
#include <numbers>

#include "dezin/dezin.hpp"

int main() {
  constexpr dezin::Coord kRadius = 6;
  const auto V = dezin::ElectricPotential::zero();
  for (int q : {0, 6, 4, 3, 2}) {
    const double flux = q == 0 ? 0.0 : 2.0 * std::numbers::pi / q;
    const auto A = dezin::MagneticPotential::landau(flux);
    const auto op = dezin::assemble(A, V, kRadius);
    const auto values = dezin::lowest_eigenvalues(op, 4);
    std::printf("flux %-8.5f", flux);
    for (double v : values) std::printf("  %10.6f", v);
    std::printf("\n");
  }
  return 0;
}
