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
#include <utility>
#include <variant>
#include <vector>

#include "clonesim/matrix.hpp"

namespace clonesim {

// Basis convention: kets are 0-indexed and |0> is the blank state. The
// 1-based index `i` of translation_generator/projector follows the usual
// labelling x_{n,1} = identity, s_{n,1} = |0><0|.

/** Cyclic shift |k> -> |k + i - 1 mod n>, for 1 <= i <= n. */
UnitaryMatrix translation_generator(std::size_t n, std::size_t i);

/** Rank-one projector onto the i-th basis ket (1 <= i <= n), i.e. |i-1><i-1|. */
ComplexMatrix projector(std::size_t n, std::size_t i);

struct TranslationRecipe {
  std::size_t n;
  friend bool operator==(const TranslationRecipe&, const TranslationRecipe&) = default;
};
struct CompositeRecipe {
  std::size_t k;
  std::size_t l;
  friend bool operator==(const CompositeRecipe&, const CompositeRecipe&) = default;
};
/** Product of controlled shifts on m qubits; pairs are 1-based (control, target). */
struct PairwiseRecipe {
  std::size_t m;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  friend bool operator==(const PairwiseRecipe&, const PairwiseRecipe&) = default;
};
using Recipe = std::variant<TranslationRecipe, CompositeRecipe, PairwiseRecipe>;

/**
 * A cloning unitary together with how it was built.
 *
 * For translation and composite recipes the unitary acts on two individuals
 * of local dimension local_dim(); for pairwise products it acts on m qubits.
 */
class CloningUnitary {
 public:
  CloningUnitary(UnitaryMatrix unitary, Recipe recipe,
                 std::optional<UnitaryMatrix> basis_rotation = std::nullopt);

  const UnitaryMatrix& unitary() const { return unitary_; }
  const ComplexMatrix& matrix() const { return unitary_.matrix(); }
  const Recipe& recipe() const { return recipe_; }
  /** Rotation R the unitary was rotated by; identity when none was applied. */
  UnitaryMatrix basis_rotation() const;
  bool is_rotated() const { return basis_rotation_.has_value(); }

  /** Dimension of one individual: n, k*l, or 2. */
  std::size_t local_dim() const;

 private:
  UnitaryMatrix unitary_;
  Recipe recipe_;
  std::optional<UnitaryMatrix> basis_rotation_;
};

/** U_n = sum_i s_{n,i} (x) x_{n,i}, the direct sum of all n cyclic shifts. */
CloningUnitary build_un(std::size_t n);

/**
 * U'_{kl} = sum_{i,j} s_{k,i} (x) s_{l,j} (x) x_{k,i} (x) x_{l,j}.
 *
 * Subsystem order is (k, l, k, l): the first individual is the leading
 * (k, l) pair and the second individual the trailing pair, so the result is
 * a two-individual unitary of local dimension k*l.
 */
CloningUnitary build_composite(std::size_t k, std::size_t l);

/**
 * Controlled-NOT on m qubits with control qubit i and target i + m/2
 * (1-based, qubit 1 is the leftmost tensor factor).
 */
UnitaryMatrix pairwise_extension(std::size_t m, std::size_t i);

/** Product of pairwise_extension(m, i) over i = 1..m/2. */
CloningUnitary pairwise_step(std::size_t m);

/** Register after g cloning steps: n^(2^g)-dimensional. */
class GenerationState {
 public:
  GenerationState(std::size_t generation, std::size_t local_dim, DensityMatrix state);

  /** Generation 0 holding the given individual. */
  static GenerationState initial(DensityMatrix rho);

  std::size_t generation() const { return generation_; }
  std::size_t local_dim() const { return local_dim_; }
  std::size_t individuals() const { return std::size_t{1} << generation_; }
  const DensityMatrix& state() const { return state_; }

  /** Reduced state of the individual at 0-based position `which`. */
  DensityMatrix individual(std::size_t which) const;

 private:
  std::size_t generation_;
  std::size_t local_dim_;
  DensityMatrix state_;
};

/** Maximum qubit register for the sequential engine (generation 3). */
inline constexpr std::size_t kMaxQubits = 8;

/**
 * One qubit cloning step: append 2^g blanks and apply the product of the
 * 2^g pairwise controlled-NOTs. Throws CapacityError past 8 qubits.
 */
GenerationState next_generation(const GenerationState& gs);

/**
 * One qudit cloning step with U_n: generation 0 -> 1 only. The n = 2 path
 * delegates to next_generation.
 */
GenerationState qudit_next_generation(const GenerationState& gs, std::size_t n);

/**
 * Unitary taking rho_0 (x) |0..0><0..0| on 2^g qubits to rho_g: the
 * generation steps 1..g, each padded with identity on the qubits it does not
 * yet touch.
 */
UnitaryMatrix generation_unitary(std::size_t g);

/** U (rho (x) |0><0|) U^dagger for a two-individual unitary. */
DensityMatrix clone_output(const UnitaryMatrix& u, const DensityMatrix& rho);

}  // namespace clonesim
