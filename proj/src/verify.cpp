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

#include "clonesim/verify.hpp"

#include <algorithm>
#include <cmath>

namespace clonesim {

double clone_deviation(const UnitaryMatrix& u, const DensityMatrix& rho,
                       const ComplexMatrix& theta) {
  const std::size_t n = rho.dim();
  const DensityMatrix out = clone_output(u, rho);
  const Complex expected = expectation(rho, theta);
  const std::size_t dims[] = {n, n};
  double worst = 0.0;
  for (std::size_t which = 0; which < 2; ++which) {
    const std::size_t keep[] = {which};
    const DensityMatrix individual = partial_trace(out, dims, keep);
    worst = std::max(worst, std::abs(expectation(individual, theta) - expected));
  }
  return worst;
}

double transmit_deviation_on_output(const DensityMatrix& output, const DensityMatrix& rho,
                                    const ComplexMatrix& tau) {
  return std::abs(expectation(output, tensor(tau, tau)) - expectation(rho, tau));
}

double transmit_deviation(const UnitaryMatrix& u, const DensityMatrix& rho,
                          const ComplexMatrix& tau) {
  return transmit_deviation_on_output(clone_output(u, rho), rho, tau);
}

CheckRecord check_cloning(const CloningUnitary& u, std::size_t trials, Rng& rng, double tol,
                          std::string name) {
  const std::size_t n = u.local_dim();
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityMatrix rho = rng.density(n);
    const ComplexMatrix theta = rng.diagonal_observable(n);
    worst = std::max(worst, clone_deviation(u.unitary(), rho, theta));
  }
  return make_check(std::move(name), "cloning identity", worst, tol,
                    std::to_string(trials) + " random states and diagonal observables");
}

CheckRecord check_transmission(const CloningUnitary& u, const ComplexMatrix& tau,
                               std::size_t trials, Rng& rng, double tol, std::string name) {
  const std::size_t n = u.local_dim();
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t)
    worst = std::max(worst, transmit_deviation(u.unitary(), rng.density(n), tau));
  return make_check(std::move(name), "transmission identity", worst, tol,
                    std::to_string(trials) + " random states");
}

CheckRecord check_full_statistics(std::size_t trials, Rng& rng, double tol) {
  const CloningUnitary cnot = build_un(2);
  const ComplexMatrix sx = pauli::x(), sy = pauli::y(), sz = pauli::z();
  const ComplexMatrix zi = tensor(sz, pauli::identity());
  const ComplexMatrix iz = tensor(pauli::identity(), sz);
  const ComplexMatrix xx = tensor(sx, sx);
  const ComplexMatrix yx = tensor(sy, sx);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityMatrix rho = rng.density(2);
    const DensityMatrix out = clone_output(cnot.unitary(), rho);
    const Complex ez = expectation(rho, sz);
    const Complex ex = expectation(rho, sx);
    const Complex ey = expectation(rho, sy);
    const double closed_form = 2.0 * rho.matrix()(0, 1).real();
    worst = std::max({worst, std::abs(expectation(out, zi) - ez),
                      std::abs(expectation(out, iz) - ez), std::abs(expectation(out, xx) - ex),
                      std::abs(expectation(out, yx) - ey),
                      std::abs(expectation(out, xx) - closed_form)});
  }
  return make_check("full_statistics.n2", "full statistics of a qubit", worst, tol,
                    "sigma_z individual, sigma_x(x)sigma_x and sigma_y(x)sigma_x global");
}

ComplexMatrix sigma_x_string(std::size_t k) {
  if (k == 0) throw DomainError("sigma_x_string: empty string");
  ComplexMatrix out = pauli::x();
  for (std::size_t i = 1; i < k; ++i) out = tensor(out, pauli::x());
  return out;
}

CheckRecord check_sequential(std::size_t g, std::size_t trials, Rng& rng, double tol) {
  if (g > 3) throw CapacityError("check_sequential: generation above 3");
  const ComplexMatrix xs = sigma_x_string(std::size_t{1} << g);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityMatrix rho0 = rng.density(2);
    GenerationState state = GenerationState::initial(rho0);
    for (std::size_t step = 0; step < g; ++step) state = next_generation(state);
    const Complex ez = expectation(rho0, pauli::z());
    for (std::size_t which = 0; which < state.individuals(); ++which)
      worst = std::max(worst, std::abs(expectation(state.individual(which), pauli::z()) - ez));
    worst = std::max(worst,
                     std::abs(expectation(state.state(), xs) - expectation(rho0, pauli::x())));
  }
  return make_check("sequential.g" + std::to_string(g), "sequential generations", worst, tol,
                    "sigma_z on every individual, sigma_x string on the register");
}

}  // namespace clonesim
