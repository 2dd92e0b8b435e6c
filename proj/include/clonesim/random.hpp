// Copyright 2026 The clonesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "clonesim/matrix.hpp"

namespace clonesim {

/** Default seed for every reproducible run. */
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/**
 * Seeded source of random test objects. One instance is threaded through a
 * run; nothing in the library touches a global generator.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }

  /** Matrix of independent standard complex Gaussians. */
  ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

  /** Full-rank state G G^dagger / Tr(G G^dagger). */
  DensityMatrix density(std::size_t n);

  /** Orthonormalized (modified Gram-Schmidt) complex Gaussian matrix. */
  UnitaryMatrix unitary(std::size_t n);

  /** Real diagonal observable with Gaussian entries. */
  ComplexMatrix diagonal_observable(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace clonesim
