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

#include "clonesim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

namespace clonesim {

namespace {

std::string dims_str(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + dims_str(a) + " vs " +
                         dims_str(b));
  }
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw InvariantError("matrix entries must be finite");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix " + dims_str(*this));
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: inner dimension mismatch " + dims_str(a) + " * " +
                         dims_str(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double max_abs(const ComplexMatrix& a) {
  double worst = 0.0;
  for (const auto& z : a.entries()) worst = std::max(worst, std::abs(z));
  return worst;
}

double max_abs_diff_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff_up_to_phase");
  const auto eb = b.entries();
  const auto pivot = static_cast<std::size_t>(
      std::max_element(eb.begin(), eb.end(),
                       [](const Complex& x, const Complex& y) { return std::abs(x) < std::abs(y); }) -
      eb.begin());
  if (std::abs(eb[pivot]) == 0.0) return max_abs(a);
  const Complex ratio = a.entries()[pivot] / eb[pivot];
  if (std::abs(ratio) == 0.0) return std::numeric_limits<double>::infinity();
  const Complex phase = ratio / std::abs(ratio);
  return max_abs_diff(a, phase * b);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c)
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(a.adjoint() * a, ComplexMatrix::identity(a.rows())) <= tol;
}

bool is_positive_semidefinite(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, kTolStruct)) return false;
  const std::size_t n = a.rows();
  // Cholesky of a + tol*I; a failed pivot means an eigenvalue below -tol.
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real() + tol;
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return true;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw DimensionError("tensor of an empty factor list");
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors) {
  return tensor(std::span<const ComplexMatrix>(factors.begin(), factors.size()));
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
  if (blocks.empty()) throw DimensionError("direct sum of no blocks");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

ComplexMatrix direct_sum(std::initializer_list<ComplexMatrix> blocks) {
  return direct_sum(std::span<const ComplexMatrix>(blocks.begin(), blocks.size()));
}

ComplexMatrix block(const ComplexMatrix& a, std::size_t offset, std::size_t size) {
  if (offset + size > a.rows() || offset + size > a.cols())
    throw DimensionError("block out of range");
  ComplexMatrix out(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = a(offset + r, offset + c);
  return out;
}

std::size_t rank(const ComplexMatrix& a, double tol) {
  ComplexMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> col_perm(cols);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    double best = 0.0;
    std::size_t pr = r, pc = r;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          pr = i;
          pc = j;
        }
    if (best <= tol) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pr, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, r), m(i, pc));
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Complex f = m(i, r) / m(r, r);
      if (f == Complex{}) continue;
      for (std::size_t j = r; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
  }
  return r;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (!mat_.is_square()) throw InvariantError("density matrix must be square");
  if (!is_hermitian(mat_, kTolStruct)) throw InvariantError("density matrix is not Hermitian");
  if (std::abs(mat_.trace() - Complex(1.0)) > kTolStruct)
    throw InvariantError("density matrix trace differs from 1");
  if (!is_positive_semidefinite(mat_, kTolEig))
    throw InvariantError("density matrix has an eigenvalue below -tol_eig");
}

DensityMatrix DensityMatrix::basis_state(std::size_t n, std::size_t k) {
  if (k >= n) throw DomainError("basis index out of range");
  ComplexMatrix m(n, n);
  m(k, k) = 1.0;
  return DensityMatrix(std::move(m));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (!is_unitary(mat_, kTolStruct)) throw InvariantError("matrix is not unitary");
}

DensityMatrix conjugate_by(const UnitaryMatrix& u, const DensityMatrix& rho) {
  if (u.dim() != rho.dim()) throw DimensionError("conjugate_by: dimension mismatch");
  ComplexMatrix out = u.matrix() * rho.matrix() * u.matrix().adjoint();
  // Symmetrize away rounding so the Hermitian check sees exact symmetry.
  for (std::size_t r = 0; r < out.rows(); ++r) {
    out(r, r) = out(r, r).real();
    for (std::size_t c = r + 1; c < out.cols(); ++c) {
      const Complex avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = avg;
      out(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix(std::move(out));
}

ComplexMatrix partial_trace_matrix(const ComplexMatrix& a, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
  if (!a.is_square()) throw DimensionError("partial_trace: matrix is not square");
  if (dims.empty()) throw DimensionError("partial_trace: no subsystems");
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) throw DimensionError("partial_trace: zero subsystem dimension");
    total *= d;
  }
  if (total != a.rows()) {
    throw DimensionError("partial_trace: subsystem dimensions multiply to " +
                         std::to_string(total) + ", matrix is " + dims_str(a));
  }
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw DomainError("partial_trace: subsystem index out of range");
    kept[k] = true;
  }
  if (keep.empty()) throw DomainError("partial_trace: keep set is empty");

  const std::size_t nsub = dims.size();
  std::size_t kept_dim = 1;
  for (std::size_t s = 0; s < nsub; ++s)
    if (kept[s]) kept_dim *= dims[s];

  // For every full index, precompute its kept-part and traced-part indices.
  std::vector<std::size_t> kept_index(total), traced_index(total);
  std::vector<std::size_t> digits(nsub);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t s = nsub; s-- > 0;) {
      digits[s] = rem % dims[s];
      rem /= dims[s];
    }
    std::size_t ki = 0, ti = 0;
    for (std::size_t s = 0; s < nsub; ++s) {
      if (kept[s])
        ki = ki * dims[s] + digits[s];
      else
        ti = ti * dims[s] + digits[s];
    }
    kept_index[idx] = ki;
    traced_index[idx] = ti;
  }

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < total; ++r)
    for (std::size_t c = 0; c < total; ++c)
      if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += a(r, c);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace_matrix(rho.matrix(), dims, keep));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& obs) {
  if (!rho.is_square() || !obs.is_square() || rho.rows() != obs.rows())
    throw DimensionError("expectation: shape mismatch " + dims_str(rho) + " vs " + dims_str(obs));
  Complex acc = 0.0;
  const std::size_t n = rho.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += rho(i, j) * obs(j, i);
  return acc;
}

Complex expectation(const DensityMatrix& rho, const ComplexMatrix& obs) {
  return expectation(rho.matrix(), obs);
}

EigenDecomposition eig_hermitian(const ComplexMatrix& input) {
  if (!is_hermitian(input, kTolStruct))
    throw NotHermitianError("eig_hermitian: input is not Hermitian");
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (const auto& z : a.entries()) scale += std::norm(z);
  scale = std::sqrt(scale);
  const double threshold = std::max(scale, 1.0) * 1e-15;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= threshold * 1e-3) continue;
        // Phase e^{-i arg apq} on column q makes the pivot real, then a real
        // Givens rotation by theta with tan(2 theta) = 2|apq| / (app - aqq).
        const Complex phase = std::conj(apq) / mag;
        const double theta = 0.5 * std::atan2(2.0 * mag, a(p, p).real() - a(q, q).real());
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex jqp = phase * s;  // J(q, p)
        const Complex jqq = phase * c;  // J(q, q); J(p, p) = c, J(p, q) = -s

        for (std::size_t k = 0; k < n; ++k) {  // a <- a J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = -akp * s + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- J^dagger a
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = -s * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {  // v <- v J
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = -vkp * s + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace clonesim
