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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "clonesim/errors.hpp"

namespace clonesim {

using Complex = std::complex<double>;

/** Structural predicates (Hermiticity, unitarity, unit trace). */
inline constexpr double kTolStruct = 1e-12;
/** Physics identities (cloning, transmission, gate expansions). */
inline constexpr double kTolVerify = 1e-10;
/** Lower bound on density-matrix eigenvalues. */
inline constexpr double kTolEig = 1e-10;

/** Largest matrix dimension handled anywhere (8 qubits). */
inline constexpr std::size_t kMaxDim = 256;

/**
 * Dense, row-major complex matrix.
 *
 * Every matrix in the toolkit (states, observables, unitaries, Kraus
 * operators) is one of these. Entries are finite; constructors that take
 * external data reject NaN/Inf.
 */
class ComplexMatrix {
 public:
  /** Zero matrix. Both dimensions must be positive. */
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

/** Largest entrywise modulus of a - b. Dimensions must agree. */
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

/**
 * Smallest max|a - e^{i phi} b| over global phases, with the phase read
 * off the largest entry of b. Returns +inf when no unit-modulus phase
 * relates the two (e.g. a is zero where b is large).
 */
double max_abs_diff_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = kTolStruct);
bool is_unitary(const ComplexMatrix& a, double tol = kTolStruct);
/** Positive semidefinite with eigenvalues >= -tol (Cholesky of a + tol*I). */
bool is_positive_semidefinite(const ComplexMatrix& a, double tol = kTolEig);

/** Kronecker product; block (i, j) of the result is a(i, j) * b. */
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
/** Left fold of tensor() over a non-empty list. */
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);
ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors);

/** Block-diagonal a (+) b (+) ... */
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);
ComplexMatrix direct_sum(std::initializer_list<ComplexMatrix> blocks);

/** Square sub-block starting at (offset, offset) of the given size. */
ComplexMatrix block(const ComplexMatrix& a, std::size_t offset, std::size_t size);

/** Numerical rank by Gaussian elimination with full pivoting. */
std::size_t rank(const ComplexMatrix& a, double tol = 1e-8);

/** Unit-trace, Hermitian, positive semidefinite matrix. */
class DensityMatrix {
 public:
  /** Validates the invariants and throws InvariantError on violation. */
  explicit DensityMatrix(ComplexMatrix m);

  /** The pure state |k><k| on dimension n. */
  static DensityMatrix basis_state(std::size_t n, std::size_t k);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/** Square matrix with U^dagger U = I within kTolStruct. */
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/** U rho U^dagger. The result is re-validated as a density matrix. */
DensityMatrix conjugate_by(const UnitaryMatrix& u, const DensityMatrix& rho);

/**
 * Reduced state on the subsystems listed in `keep` (any order; the output
 * orders them ascending). `dims` gives the local dimension of every
 * subsystem, leftmost tensor factor first.
 */
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep);

/** Same contraction on an arbitrary square matrix; no normalization checks. */
ComplexMatrix partial_trace_matrix(const ComplexMatrix& a, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep);

/** Tr(rho * obs). */
Complex expectation(const DensityMatrix& rho, const ComplexMatrix& obs);
Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& obs);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/**
 * Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations. Throws NotHermitianError if a deviates from a^dagger by more
 * than kTolStruct anywhere.
 */
EigenDecomposition eig_hermitian(const ComplexMatrix& a);

}  // namespace clonesim
