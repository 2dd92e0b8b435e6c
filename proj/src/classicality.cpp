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

#include "clonesim/classicality.hpp"

#include <cmath>
#include <numbers>

namespace clonesim {

namespace {
constexpr double kFixedPointTol = 1e-8;
}

ClassicalityVerdict classify_operation(const ComplexMatrix& u) {
  if (!is_unitary(u, kTolStruct)) throw InvariantError("classify_operation: input is not unitary");
  ClassicalityVerdict verdict;
  verdict.pointer_basis_note = "computational basis of the blank qudits";
  for (std::size_t c = 0; c < u.cols(); ++c) {
    std::size_t support = 0;
    for (std::size_t r = 0; r < u.rows(); ++r)
      if (std::abs(u(r, c)) > kMonomialThreshold) ++support;
    if (support != 1) {
      verdict.witness = c;
      return verdict;
    }
  }
  verdict.is_classical = true;
  return verdict;
}

UnitaryMatrix build_ux() {
  const double h = 1.0 / std::numbers::sqrt2;
  return UnitaryMatrix(ComplexMatrix{{h, h, 0.0, 0.0},
                                     {0.0, 0.0, h, -h},
                                     {0.0, 0.0, h, h},
                                     {h, -h, 0.0, 0.0}});
}

KrausSet extract_reduced_channel(const CloningUnitary& u, KeptIndividual keep) {
  if (std::holds_alternative<PairwiseRecipe>(u.recipe()))
    throw DomainError("extract_reduced_channel: needs a two-individual cloning unitary");
  const std::size_t n = u.local_dim();
  const ComplexMatrix& m = u.matrix();
  KrausSet set;
  set.input_dim = n;
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix k(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t row = keep == KeptIndividual::kFirst ? a * n + j : j * n + a;
        k(a, b) = m(row, b * n);
      }
    if (max_abs(k) > kMonomialThreshold) ++set.count_nonzero;
    set.operators.push_back(std::move(k));
  }
  return set;
}

ComplexMatrix apply_channel(const KrausSet& kraus, const ComplexMatrix& rho) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& k : kraus.operators) out += k * rho * k.adjoint();
  return out;
}

double completeness_deviation(const KrausSet& kraus) {
  ComplexMatrix sum(kraus.input_dim, kraus.input_dim);
  for (const auto& k : kraus.operators) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(kraus.input_dim));
}

ComplexMatrix transfer_matrix(const KrausSet& kraus) {
  const std::size_t n = kraus.input_dim;
  ComplexMatrix t(n * n, n * n);
  for (const auto& k : kraus.operators) t += tensor(k, k.conjugate());
  return t;
}

ChannelSummary summarize_channel(const KrausSet& kraus) {
  ChannelSummary s;
  s.raw_kraus_count = kraus.operators.size();
  s.nonzero_kraus_count = kraus.count_nonzero;
  const ComplexMatrix t = transfer_matrix(kraus);
  s.transfer_rank = rank(t, kFixedPointTol);
  s.fixed_point_dimension = t.rows() - rank(t - ComplexMatrix::identity(t.rows()), kFixedPointTol);
  return s;
}

DensityMatrix dephasing_channel(const DensityMatrix& rho) {
  const std::size_t n = rho.dim();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = rho.matrix()(i, i);
  return DensityMatrix(std::move(out));
}

}  // namespace clonesim
