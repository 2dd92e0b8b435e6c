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
#include <cstdint>
#include <string>
#include <vector>

#include "clonesim/cloning.hpp"
#include "clonesim/matrix.hpp"
#include "clonesim/random.hpp"

namespace clonesim {

/**
 * The cloned observable theta (real diagonal) and the transmitted observable
 * tau (a Hermitian antidiagonal 0/1 matrix), both on dimension n.
 */
class ObservablePair {
 public:
  ObservablePair(ComplexMatrix theta, ComplexMatrix tau);

  const ComplexMatrix& theta() const { return theta_; }
  const ComplexMatrix& tau() const { return tau_; }
  std::size_t dim() const { return theta_.rows(); }

 private:
  ComplexMatrix theta_;
  ComplexMatrix tau_;
};

/**
 * Antidiagonal 0/1 pattern. Bit k (k = 0 is the top-right entry, read towards
 * the bottom-left) sets tau(k, n-1-k) = 1.
 */
ComplexMatrix antidiagonal_pattern(std::size_t n, std::uint32_t bits);
/** "1101"-style string, top-right entry first. */
std::string pattern_string(std::size_t n, std::uint32_t bits);
/** Hermitian iff the pattern is a palindrome. */
bool pattern_is_hermitian(std::size_t n, std::uint32_t bits);

struct TauCandidate {
  std::uint32_t bits;
  std::string pattern;
  ComplexMatrix tau;
  double max_deviation;
  bool passes;
};

/**
 * Transmission deviation of every Hermitian antidiagonal 0/1 pattern
 * (including zero) against 50 seeded random states, ordered by pattern bits.
 * `u` must act on n^2.
 */
std::vector<TauCandidate> scan_tau_patterns(const CloningUnitary& u, std::size_t n,
                                            std::uint64_t seed = kDefaultSeed,
                                            double tol = kTolVerify);

/** Non-zero patterns from scan_tau_patterns that pass, ordered by pattern bits. */
std::vector<ComplexMatrix> search_tau(const CloningUnitary& u, std::size_t n,
                                      std::uint64_t seed = kDefaultSeed);

/**
 * Canonical transmitted observable: the full antidiagonal exchange matrix for
 * even n; for odd n the passing pattern of search_tau(build_un(n), n) with the
 * most ones (the full antidiagonal whenever it passes).
 */
ComplexMatrix exchange_tau(std::size_t n);

struct TauSpectrumReport {
  std::size_t dim = 0;
  std::size_t lambda_minus = 0;  // multiplicity of -1
  std::size_t lambda_zero = 0;
  std::size_t lambda_plus = 0;
  /** Eigenvalues farther than 1e-8 from all of {-1, 0, 1}. */
  std::size_t unclassified = 0;
  bool satisfies_lemma = false;
};

/**
 * Rounds the spectrum of a Hermitian tau onto {-1, 0, 1} (tolerance 1e-8)
 * and accepts it iff lambda_1 = lambda_-1 = dim/2 and lambda_0 = 0.
 */
TauSpectrumReport lemma_spectrum_check(const ComplexMatrix& tau);

/**
 * True iff the multiplicities satisfy the three counting equations
 *   d l1 = l1^2 + lm1^2,  d l0 = l0 (2d - l0),  d lm1 = 2 l1 lm1.
 * Throws DomainError unless l1 + l0 + lm1 == d.
 */
bool verify_degeneracy_equations(long l1, long l0, long lm1, long d);

struct DegeneracyTriple {
  long l1;
  long l0;
  long lm1;
  friend bool operator==(const DegeneracyTriple&, const DegeneracyTriple&) = default;
  friend auto operator<=>(const DegeneracyTriple&, const DegeneracyTriple&) = default;
};

/** Every non-negative triple summing to d that satisfies the equations, sorted. */
std::vector<DegeneracyTriple> scan_degeneracy_solutions(long d);

/**
 * Permutation F with F (Z (x) I_{d/2} (x) Z (x) I_{d/2}) F^dagger = Z (x) I_{d^2/2}.
 *
 * Basis states whose two Z factors have product sign +1 are sent, in
 * increasing index order, to the first d^2/2 positions; the rest follow in
 * increasing order.
 */
UnitaryMatrix build_flip_operator(std::size_t d);

/** Z (x) I_{d/2}: the canonical diagonal form D of a nontrivial tau. */
ComplexMatrix lemma_diagonal_form(std::size_t d);

/**
 * (V (x) V)(w1 (+) w2) F (V (x) V)^dagger. Such a unitary maps tau (x) tau
 * to tau (x) 1 under conjugation, tau = V D V^dagger.
 */
UnitaryMatrix lemma_construct_unitary(const UnitaryMatrix& v, const UnitaryMatrix& w1,
                                      const UnitaryMatrix& w2);

}  // namespace clonesim
