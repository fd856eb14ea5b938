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

#ifndef DEZIN_DEZIN_HPP
#define DEZIN_DEZIN_HPP

#include "dezin/lattice.hpp"
#include "dezin/sparse_form.hpp"
#include "dezin/chain.hpp"
#include "dezin/forms.hpp"
#include "dezin/calculus.hpp"
#include "dezin/potentials.hpp"
#include "dezin/magnetic.hpp"
#include "dezin/spectral.hpp"
#include "dezin/random.hpp"

#endif  // DEZIN_DEZIN_HPP
