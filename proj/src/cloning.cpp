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

#include "clonesim/cloning.hpp"

#include <string>

namespace clonesim {

namespace {

void require_index(std::size_t n, std::size_t i, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": dimension must be positive");
  if (i < 1 || i > n) {
    throw DomainError(std::string(what) + ": index " + std::to_string(i) + " outside 1.." +
                      std::to_string(n));
  }
}

std::size_t checked_square(std::size_t n) {
  if (n > 16) throw CapacityError("two individuals of dimension " + std::to_string(n) +
                                  " exceed the 256-dimensional cap");
  return n * n;
}

}  // namespace

UnitaryMatrix translation_generator(std::size_t n, std::size_t i) {
  require_index(n, i, "translation_generator");
  ComplexMatrix x(n, n);
  for (std::size_t k = 0; k < n; ++k) x((k + i - 1) % n, k) = 1.0;
  return UnitaryMatrix(std::move(x));
}

ComplexMatrix projector(std::size_t n, std::size_t i) {
  require_index(n, i, "projector");
  ComplexMatrix s(n, n);
  s(i - 1, i - 1) = 1.0;
  return s;
}

CloningUnitary::CloningUnitary(UnitaryMatrix unitary, Recipe recipe,
                               std::optional<UnitaryMatrix> basis_rotation)
    : unitary_(std::move(unitary)),
      recipe_(std::move(recipe)),
      basis_rotation_(std::move(basis_rotation)) {
  std::size_t expected = 0;
  if (const auto* t = std::get_if<TranslationRecipe>(&recipe_)) {
    expected = t->n * t->n;
  } else if (const auto* c = std::get_if<CompositeRecipe>(&recipe_)) {
    expected = c->k * c->l * c->k * c->l;
  } else {
    expected = std::size_t{1} << std::get<PairwiseRecipe>(recipe_).m;
  }
  if (unitary_.dim() != expected)
    throw InvariantError("cloning unitary dimension does not match its recipe");
  if (basis_rotation_ && basis_rotation_->dim() != local_dim())
    throw DimensionError("basis rotation dimension does not match the individual");
}

UnitaryMatrix CloningUnitary::basis_rotation() const {
  if (basis_rotation_) return *basis_rotation_;
  return UnitaryMatrix(ComplexMatrix::identity(local_dim()));
}

std::size_t CloningUnitary::local_dim() const {
  if (const auto* t = std::get_if<TranslationRecipe>(&recipe_)) return t->n;
  if (const auto* c = std::get_if<CompositeRecipe>(&recipe_)) return c->k * c->l;
  return 2;
}

CloningUnitary build_un(std::size_t n) {
  if (n < 2) throw DomainError("build_un: n must be at least 2");
  const std::size_t dim = checked_square(n);
  ComplexMatrix u(dim, dim);
  for (std::size_t i = 1; i <= n; ++i)
    u += tensor(projector(n, i), translation_generator(n, i).matrix());
  return CloningUnitary(UnitaryMatrix(std::move(u)), TranslationRecipe{n});
}

CloningUnitary build_composite(std::size_t k, std::size_t l) {
  if (k < 2 || l < 2) throw DomainError("build_composite: k and l must be at least 2");
  const std::size_t dim = checked_square(k * l);
  ComplexMatrix u(dim, dim);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= l; ++j)
      u += tensor({projector(k, i), projector(l, j), translation_generator(k, i).matrix(),
                   translation_generator(l, j).matrix()});
  return CloningUnitary(UnitaryMatrix(std::move(u)), CompositeRecipe{k, l});
}

UnitaryMatrix pairwise_extension(std::size_t m, std::size_t i) {
  if (m == 0 || m % 2 != 0) throw DomainError("pairwise_extension: m must be even and positive");
  if (m > kMaxQubits) throw CapacityError("pairwise_extension: more than 8 qubits");
  require_index(m / 2, i, "pairwise_extension");
  // Qubit q (1-based) is bit m - q of the basis index.
  const std::size_t control_bit = std::size_t{1} << (m - i);
  const std::size_t target_bit = std::size_t{1} << (m - (i + m / 2));
  const std::size_t dim = std::size_t{1} << m;
  ComplexMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t row = (col & control_bit) ? (col ^ target_bit) : col;
    u(row, col) = 1.0;
  }
  return UnitaryMatrix(std::move(u));
}

CloningUnitary pairwise_step(std::size_t m) {
  const std::size_t dim = std::size_t{1} << m;
  ComplexMatrix u = ComplexMatrix::identity(dim);
  PairwiseRecipe recipe{m, {}};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    u = u * pairwise_extension(m, i).matrix();
    recipe.pairs.emplace_back(i, i + m / 2);
  }
  return CloningUnitary(UnitaryMatrix(std::move(u)), std::move(recipe));
}

GenerationState::GenerationState(std::size_t generation, std::size_t local_dim,
                                 DensityMatrix state)
    : generation_(generation), local_dim_(local_dim), state_(std::move(state)) {
  if (local_dim < 2) throw InvariantError("local dimension must be at least 2");
  if (generation > 3) throw CapacityError("generation index above 3");
  std::size_t expected = 1;
  for (std::size_t k = 0; k < individuals(); ++k) {
    expected *= local_dim;
    if (expected > kMaxDim) throw CapacityError("generation state exceeds 256 dimensions");
  }
  if (state_.dim() != expected)
    throw InvariantError("generation state dimension must be local_dim^(2^g)");
}

GenerationState GenerationState::initial(DensityMatrix rho) {
  const std::size_t n = rho.dim();
  return GenerationState(0, n, std::move(rho));
}

DensityMatrix GenerationState::individual(std::size_t which) const {
  if (which >= individuals()) throw DomainError("individual index out of range");
  const std::vector<std::size_t> dims(individuals(), local_dim_);
  const std::size_t keep[] = {which};
  return partial_trace(state_, dims, keep);
}

GenerationState next_generation(const GenerationState& gs) {
  if (gs.local_dim() != 2) throw DomainError("next_generation: the sequential engine is qubit-only");
  const std::size_t current = gs.individuals();
  const std::size_t m = 2 * current;
  if (m > kMaxQubits) throw CapacityError("next_generation: more than 8 qubits");
  const ComplexMatrix blanks = DensityMatrix::basis_state(std::size_t{1} << current, 0).matrix();
  const DensityMatrix padded(tensor(gs.state().matrix(), blanks));
  const CloningUnitary step = pairwise_step(m);
  return GenerationState(gs.generation() + 1, 2, conjugate_by(step.unitary(), padded));
}

GenerationState qudit_next_generation(const GenerationState& gs, std::size_t n) {
  if (n < 2) throw DomainError("qudit_next_generation: n must be at least 2");
  if (gs.local_dim() != n) throw DimensionError("qudit_next_generation: local dimension mismatch");
  if (n == 2) return next_generation(gs);
  if (n * n > kMaxDim) throw CapacityError("qudit_next_generation: n^2 exceeds 256");
  if (gs.generation() != 0)
    throw DomainError("qudit_next_generation: only generation 0 -> 1 is defined for n > 2");
  const CloningUnitary u = build_un(n);
  return GenerationState(1, n, clone_output(u.unitary(), gs.state()));
}

UnitaryMatrix generation_unitary(std::size_t g) {
  if (g > 3) throw CapacityError("generation_unitary: more than 8 qubits");
  const std::size_t qubits = std::size_t{1} << g;
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << qubits);
  for (std::size_t s = 1; s <= g; ++s) {
    const std::size_t m = std::size_t{1} << s;
    ComplexMatrix step = pairwise_step(m).matrix();
    if (m < qubits) step = tensor(step, ComplexMatrix::identity(std::size_t{1} << (qubits - m)));
    u = step * u;
  }
  return UnitaryMatrix(std::move(u));
}

DensityMatrix clone_output(const UnitaryMatrix& u, const DensityMatrix& rho) {
  const std::size_t n = rho.dim();
  if (u.dim() != n * n) throw DimensionError("clone_output: unitary does not act on n^2");
  const DensityMatrix joint(tensor(rho.matrix(), DensityMatrix::basis_state(n, 0).matrix()));
  return conjugate_by(u, joint);
}

}  // namespace clonesim
