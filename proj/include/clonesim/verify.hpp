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
#include <string>

#include "clonesim/cloning.hpp"
#include "clonesim/matrix.hpp"
#include "clonesim/pauli.hpp"
#include "clonesim/random.hpp"
#include "clonesim/report.hpp"

namespace clonesim {

// Deviations of the two protocol identities for a single input state. All of
// them take a two-individual unitary u on n^2 and a state rho on n.

/** max over both individuals of |Tr(rho_individual theta) - Tr(rho theta)|. */
double clone_deviation(const UnitaryMatrix& u, const DensityMatrix& rho,
                       const ComplexMatrix& theta);

/** |Tr(U(rho (x) |0><0|)U^dagger (tau (x) tau)) - Tr(rho tau)|. */
double transmit_deviation(const UnitaryMatrix& u, const DensityMatrix& rho,
                          const ComplexMatrix& tau);

/** Same, for an already-cloned output state. */
double transmit_deviation_on_output(const DensityMatrix& output, const DensityMatrix& rho,
                                    const ComplexMatrix& tau);

/**
 * Cloning identity over `trials` random states, each paired with a fresh
 * random real diagonal observable.
 */
CheckRecord check_cloning(const CloningUnitary& u, std::size_t trials, Rng& rng, double tol,
                          std::string name);

/** Transmission identity for a fixed tau over `trials` random states. */
CheckRecord check_transmission(const CloningUnitary& u, const ComplexMatrix& tau,
                               std::size_t trials, Rng& rng, double tol, std::string name);

/**
 * Qubit full-statistics property of one CNOT cloning step: the individual
 * <sigma_z>, the global <sigma_x sigma_x> and the global <sigma_y sigma_x>
 * reproduce Tr(rho sigma_i), plus the closed form 2 Re(rho_01).
 */
CheckRecord check_full_statistics(std::size_t trials, Rng& rng, double tol);

/**
 * After g sequential qubit generations every individual carries the initial
 * <sigma_z>, and <sigma_x^{(x) 2^g}> carries the initial <sigma_x>.
 */
CheckRecord check_sequential(std::size_t g, std::size_t trials, Rng& rng, double tol);

/** sigma_x^{(x) k} as a dense matrix. */
ComplexMatrix sigma_x_string(std::size_t k);

}  // namespace clonesim
