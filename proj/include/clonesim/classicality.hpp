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
#include <optional>
#include <string>
#include <vector>

#include "clonesim/cloning.hpp"
#include "clonesim/matrix.hpp"

namespace clonesim {

/** Entries at or below this modulus count as zero for the column test. */
inline constexpr double kMonomialThreshold = 1e-10;

struct ClassicalityVerdict {
  bool is_classical = false;
  /** First column that superposes several pointer states; empty when classical. */
  std::optional<std::size_t> witness;
  std::string pointer_basis_note;
};

/**
 * Classical iff every column of u holds exactly one entry above
 * kMonomialThreshold, i.e. u permutes the pointer (computational) basis up
 * to phases. Throws InvariantError for non-unitary input.
 */
ClassicalityVerdict classify_operation(const ComplexMatrix& u);

/** The quantum cloner of sigma_x (individual) and sigma_z (global). */
UnitaryMatrix build_ux();

enum class KeptIndividual { kFirst, kSecond };

struct KrausSet {
  std::vector<ComplexMatrix> operators;
  std::size_t input_dim = 0;
  std::size_t count_nonzero = 0;
};

/**
 * Kraus operators of rho -> Tr_other[U (rho (x) |0><0|) U^dagger]. The
 * environment is the blank input plus the discarded output, so there is one
 * operator per basis state j of the discarded individual:
 *   first:  K_j(a, b) = U[(a, j), (b, 0)]
 *   second: K_j(a, b) = U[(j, a), (b, 0)]
 */
KrausSet extract_reduced_channel(const CloningUnitary& u, KeptIndividual keep);

/** sum_j K_j rho K_j^dagger. */
ComplexMatrix apply_channel(const KrausSet& kraus, const ComplexMatrix& rho);

/** max |sum_j K_j^dagger K_j - I|. */
double completeness_deviation(const KrausSet& kraus);

/** Row-major superoperator sum_j K_j (x) conj(K_j) acting on vec(rho). */
ComplexMatrix transfer_matrix(const KrausSet& kraus);

struct ChannelSummary {
  std::size_t raw_kraus_count = 0;
  std::size_t nonzero_kraus_count = 0;
  std::size_t transfer_rank = 0;
  /** Dimension of {X : E(X) = X}, i.e. nullity of T - I at tolerance 1e-8. */
  std::size_t fixed_point_dimension = 0;
};

ChannelSummary summarize_channel(const KrausSet& kraus);

/** Zeroes the off-diagonal entries. */
DensityMatrix dephasing_channel(const DensityMatrix& rho);

}  // namespace clonesim
