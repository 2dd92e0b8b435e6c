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

#include <cstddef>
#include <string_view>

#include "clonesim/cloning.hpp"
#include "clonesim/observables.hpp"
#include "clonesim/random.hpp"
#include "clonesim/report.hpp"

namespace clonesim {

/**
 * A cloning setup expressed in a rotated basis:
 *   theta' = R^dagger theta R,  tau' = R^dagger tau R,
 *   U'     = (R^dagger (x) R^dagger) U (R (x) 1).
 * The blank input keeps the unrotated |0><0|.
 */
struct RotatedCloningSetup {
  UnitaryMatrix rotation;
  CloningUnitary base;
  ObservablePair pair;
  ComplexMatrix theta_rot;
  ComplexMatrix tau_rot;
  /** U' tagged with its rotation. */
  CloningUnitary rotated;
};

RotatedCloningSetup rotate_setup(const CloningUnitary& base, const ObservablePair& pair,
                                 const UnitaryMatrix& r);

/**
 * For seeded random rho checks both links of
 *   Tr[rho tau'] = Tr[U'(rho (x) rho_e)U'^dagger (tau' (x) tau')]
 *               = Tr[U (R rho R^dagger (x) rho_e) U^dagger (tau (x) tau)].
 * The last form uses the unrotated U and tau.
 */
VerificationReport verify_rotated_transmission(const RotatedCloningSetup& setup,
                                               std::size_t trials, Rng& rng,
                                               double tol = kTolVerify);

/** Cloning identity for theta' on both individuals of U'(rho (x) rho_e)U'^dagger. */
CheckRecord verify_rotated_cloning(const RotatedCloningSetup& setup, std::size_t trials,
                                   Rng& rng, double tol = kTolVerify);

/** "identity", "hadamard" (n = 2) or "fourier-n" (discrete Fourier transform on n). */
UnitaryMatrix rotation_preset(std::string_view name, std::size_t n);

}  // namespace clonesim
