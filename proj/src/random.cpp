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

#include "clonesim/random.hpp"

#include <cmath>

namespace clonesim {

ComplexMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = complex_normal();
  return g;
}

DensityMatrix Rng::density(std::size_t n) {
  const ComplexMatrix g = gaussian_matrix(n, n);
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= Complex(1.0 / tr);
  for (std::size_t r = 0; r < n; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return DensityMatrix(std::move(rho));
}

UnitaryMatrix Rng::unitary(std::size_t n) {
  ComplexMatrix q = gaussian_matrix(n, n);
  // Two Gram-Schmidt passes keep U^dagger U within 1e-15 for n <= 16.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, k)) * q(r, j);
        for (std::size_t r = 0; r < n; ++r) q(r, j) -= dot * q(r, k);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, j));
      norm = std::sqrt(norm);
      for (std::size_t r = 0; r < n; ++r) q(r, j) /= norm;
    }
  }
  return UnitaryMatrix(std::move(q));
}

ComplexMatrix Rng::diagonal_observable(std::size_t n) {
  ComplexMatrix theta(n, n);
  for (std::size_t i = 0; i < n; ++i) theta(i, i) = normal();
  return theta;
}

}  // namespace clonesim
