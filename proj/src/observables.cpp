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

#include "clonesim/observables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "clonesim/verify.hpp"

namespace clonesim {

namespace {

constexpr double kSpectrumRounding = 1e-8;
constexpr std::size_t kSearchStates = 50;

}  // namespace

ObservablePair::ObservablePair(ComplexMatrix theta, ComplexMatrix tau)
    : theta_(std::move(theta)), tau_(std::move(tau)) {
  if (!theta_.is_square() || !tau_.is_square() || theta_.rows() != tau_.rows())
    throw DimensionError("observable pair: theta and tau must be square of equal dimension");
  const std::size_t n = theta_.rows();
  for (std::size_t r = 0; r < n; ++r) {
    if (std::abs(theta_(r, r).imag()) >= kTolStruct)
      throw InvariantError("theta must be real on the diagonal");
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c && std::abs(theta_(r, c)) >= kTolStruct)
        throw InvariantError("theta must be diagonal");
      const Complex t = tau_(r, c);
      if (r + c != n - 1) {
        if (t != Complex{}) throw InvariantError("tau must be antidiagonal");
      } else if (t != Complex(0.0) && t != Complex(1.0)) {
        throw InvariantError("tau entries must be exactly 0 or 1");
      }
    }
  }
  if (!is_hermitian(tau_, 0.0)) throw InvariantError("tau must be Hermitian");
}

ComplexMatrix antidiagonal_pattern(std::size_t n, std::uint32_t bits) {
  if (n == 0 || n > 32) throw DomainError("antidiagonal_pattern: unsupported dimension");
  ComplexMatrix tau(n, n);
  for (std::size_t k = 0; k < n; ++k)
    if (bits & (std::uint32_t{1} << k)) tau(k, n - 1 - k) = 1.0;
  return tau;
}

std::string pattern_string(std::size_t n, std::uint32_t bits) {
  std::string s(n, '0');
  for (std::size_t k = 0; k < n; ++k)
    if (bits & (std::uint32_t{1} << k)) s[k] = '1';
  return s;
}

bool pattern_is_hermitian(std::size_t n, std::uint32_t bits) {
  for (std::size_t k = 0; k < n / 2; ++k) {
    const bool a = bits & (std::uint32_t{1} << k);
    const bool b = bits & (std::uint32_t{1} << (n - 1 - k));
    if (a != b) return false;
  }
  return true;
}

std::vector<TauCandidate> scan_tau_patterns(const CloningUnitary& u, std::size_t n,
                                            std::uint64_t seed, double tol) {
  if (n < 2 || n > 16 || u.matrix().rows() != n * n)
    throw DimensionError("scan_tau_patterns: unitary does not act on n^2");
  Rng rng(seed);
  std::vector<DensityMatrix> inputs;
  std::vector<DensityMatrix> outputs;
  inputs.reserve(kSearchStates);
  outputs.reserve(kSearchStates);
  for (std::size_t s = 0; s < kSearchStates; ++s) {
    inputs.push_back(rng.density(n));
    outputs.push_back(clone_output(u.unitary(), inputs.back()));
  }

  std::vector<TauCandidate> out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    if (!pattern_is_hermitian(n, bits)) continue;
    ComplexMatrix tau = antidiagonal_pattern(n, bits);
    double worst = 0.0;
    for (std::size_t s = 0; s < kSearchStates; ++s)
      worst = std::max(worst, transmit_deviation_on_output(outputs[s], inputs[s], tau));
    out.push_back({bits, pattern_string(n, bits), std::move(tau), worst, worst < tol});
  }
  return out;
}

std::vector<ComplexMatrix> search_tau(const CloningUnitary& u, std::size_t n,
                                      std::uint64_t seed) {
  std::vector<ComplexMatrix> found;
  for (auto& c : scan_tau_patterns(u, n, seed))
    if (c.passes && c.bits != 0) found.push_back(std::move(c.tau));
  return found;
}

ComplexMatrix exchange_tau(std::size_t n) {
  if (n < 2) throw DomainError("exchange_tau: n must be at least 2");
  if (n % 2 == 0) return antidiagonal_pattern(n, (std::uint32_t{1} << n) - 1);
  const auto candidates = scan_tau_patterns(build_un(n), n);
  const TauCandidate* best = nullptr;
  for (const auto& c : candidates) {
    if (!c.passes || c.bits == 0) continue;
    if (!best || std::popcount(c.bits) > std::popcount(best->bits)) best = &c;
  }
  if (!best) throw DomainError("exchange_tau: no transmitted antidiagonal pattern found");
  return best->tau;
}

TauSpectrumReport lemma_spectrum_check(const ComplexMatrix& tau) {
  const EigenDecomposition eig = eig_hermitian(tau);
  TauSpectrumReport report;
  report.dim = tau.rows();
  for (const double v : eig.values) {
    if (std::abs(v - 1.0) <= kSpectrumRounding)
      ++report.lambda_plus;
    else if (std::abs(v) <= kSpectrumRounding)
      ++report.lambda_zero;
    else if (std::abs(v + 1.0) <= kSpectrumRounding)
      ++report.lambda_minus;
    else
      ++report.unclassified;
  }
  report.satisfies_lemma = report.unclassified == 0 && report.dim % 2 == 0 &&
                           report.lambda_zero == 0 && report.lambda_plus == report.dim / 2 &&
                           report.lambda_minus == report.dim / 2;
  return report;
}

bool verify_degeneracy_equations(long l1, long l0, long lm1, long d) {
  if (l1 < 0 || l0 < 0 || lm1 < 0 || l1 + l0 + lm1 != d)
    throw DomainError("verify_degeneracy_equations: multiplicities must be non-negative and sum to d");
  return d * l1 == l1 * l1 + lm1 * lm1 && d * l0 == l0 * (2 * d - l0) && d * lm1 == 2 * l1 * lm1;
}

std::vector<DegeneracyTriple> scan_degeneracy_solutions(long d) {
  std::vector<DegeneracyTriple> out;
  for (long l1 = 0; l1 <= d; ++l1)
    for (long l0 = 0; l1 + l0 <= d; ++l0) {
      const long lm1 = d - l1 - l0;
      if (verify_degeneracy_equations(l1, l0, lm1, d)) out.push_back({l1, l0, lm1});
    }
  std::sort(out.begin(), out.end());
  return out;
}

UnitaryMatrix build_flip_operator(std::size_t d) {
  if (d == 0 || d % 2 != 0) throw DomainError("build_flip_operator: d must be even");
  if (d > 16) throw CapacityError("build_flip_operator: d above 16");
  const std::size_t dim = d * d;
  const std::size_t half = d / 2;
  ComplexMatrix f(dim, dim);
  std::size_t next_plus = 0, next_minus = dim / 2;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const bool a_plus = idx / d < half;
    const bool b_plus = idx % d < half;
    const std::size_t target = (a_plus == b_plus) ? next_plus++ : next_minus++;
    f(target, idx) = 1.0;
  }
  return UnitaryMatrix(std::move(f));
}

ComplexMatrix lemma_diagonal_form(std::size_t d) {
  if (d == 0 || d % 2 != 0) throw DomainError("lemma_diagonal_form: d must be even");
  return tensor(ComplexMatrix::diagonal({1.0, -1.0}), ComplexMatrix::identity(d / 2));
}

UnitaryMatrix lemma_construct_unitary(const UnitaryMatrix& v, const UnitaryMatrix& w1,
                                      const UnitaryMatrix& w2) {
  const std::size_t d = v.dim();
  if (d % 2 != 0) throw DomainError("lemma_construct_unitary: d must be even");
  if (w1.dim() != d * d / 2 || w2.dim() != d * d / 2)
    throw DimensionError("lemma_construct_unitary: w1 and w2 must have dimension d^2/2");
  const ComplexMatrix vv = tensor(v.matrix(), v.matrix());
  const ComplexMatrix w = direct_sum({w1.matrix(), w2.matrix()});
  return UnitaryMatrix(vv * w * build_flip_operator(d).matrix() * vv.adjoint());
}

}  // namespace clonesim
