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

#include "clonesim/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "clonesim/verify.hpp"

namespace clonesim {

RotatedCloningSetup rotate_setup(const CloningUnitary& base, const ObservablePair& pair,
                                 const UnitaryMatrix& r) {
  const std::size_t n = base.local_dim();
  if (r.dim() != n || pair.dim() != n)
    throw DimensionError("rotate_setup: rotation and observables must match the individual");
  if (std::holds_alternative<PairwiseRecipe>(base.recipe()))
    throw DomainError("rotate_setup: needs a two-individual cloning unitary");
  const ComplexMatrix& rm = r.matrix();
  const ComplexMatrix rd = rm.adjoint();
  ComplexMatrix theta_rot = rd * pair.theta() * rm;
  ComplexMatrix tau_rot = rd * pair.tau() * rm;
  ComplexMatrix u_rot =
      tensor(rd, rd) * base.matrix() * tensor(rm, ComplexMatrix::identity(n));
  CloningUnitary rotated(UnitaryMatrix(std::move(u_rot)), base.recipe(), r);
  return RotatedCloningSetup{r, base, pair, std::move(theta_rot), std::move(tau_rot),
                             std::move(rotated)};
}

VerificationReport verify_rotated_transmission(const RotatedCloningSetup& setup,
                                               std::size_t trials, Rng& rng, double tol) {
  const std::size_t n = setup.pair.dim();
  const ComplexMatrix& r = setup.rotation.matrix();
  const ComplexMatrix tau_rot_pair = tensor(setup.tau_rot, setup.tau_rot);
  const ComplexMatrix tau_pair = tensor(setup.pair.tau(), setup.pair.tau());
  const ComplexMatrix blank = DensityMatrix::basis_state(n, 0).matrix();
  const UnitaryMatrix r_pad(tensor(r, ComplexMatrix::identity(n)));

  double worst_rotated = 0.0, worst_unrotated = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const DensityMatrix rho = rng.density(n);
    const Complex lhs = expectation(rho, setup.tau_rot);
    const DensityMatrix joint(tensor(rho.matrix(), blank));
    const DensityMatrix out_rot = conjugate_by(setup.rotated.unitary(), joint);
    worst_rotated = std::max(worst_rotated, std::abs(expectation(out_rot, tau_rot_pair) - lhs));
    const DensityMatrix rotated_input = conjugate_by(r_pad, joint);
    const DensityMatrix out_base = conjugate_by(setup.base.unitary(), rotated_input);
    worst_unrotated = std::max(worst_unrotated, std::abs(expectation(out_base, tau_pair) - lhs));
  }
  VerificationReport report;
  report.add(make_check("rotated.transmission.rotated_frame", "transmission in any basis",
                        worst_rotated, tol, "U' with tau' (x) tau'"));
  report.add(make_check("rotated.transmission.base_frame", "transmission in any basis",
                        worst_unrotated, tol, "U on R rho R^dagger with unrotated tau (x) tau"));
  return report;
}

CheckRecord verify_rotated_cloning(const RotatedCloningSetup& setup, std::size_t trials,
                                   Rng& rng, double tol) {
  const std::size_t n = setup.pair.dim();
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t)
    worst = std::max(worst,
                     clone_deviation(setup.rotated.unitary(), rng.density(n), setup.theta_rot));
  return make_check("rotated.cloning", "cloning in any basis", worst, tol,
                    "theta' on both individuals of U'");
}

UnitaryMatrix rotation_preset(std::string_view name, std::size_t n) {
  if (n < 1) throw DomainError("rotation_preset: dimension must be positive");
  if (name == "identity") return UnitaryMatrix(ComplexMatrix::identity(n));
  if (name == "hadamard") {
    if (n != 2) throw DomainError("rotation_preset: hadamard is defined for n = 2");
    const double h = 1.0 / std::numbers::sqrt2;
    return UnitaryMatrix(ComplexMatrix{{h, h}, {h, -h}});
  }
  if (name == "fourier" || name == "fourier-n" || name == "fourier-" + std::to_string(n)) {
    ComplexMatrix f(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                       static_cast<double>(n));
    return UnitaryMatrix(std::move(f));
  }
  throw DomainError("rotation_preset: unknown preset '" + std::string(name) + "'");
}

}  // namespace clonesim
