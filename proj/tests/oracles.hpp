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

// Independent reference computations for the tests. Nothing here calls into
// the library's linear algebra; operators are plain nested vectors and every
// contraction is an explicit index loop.

#include <complex>
#include <cstddef>
#include <vector>

#include "clonesim/matrix.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<C>(c, 0.0)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat from(const clonesim::ComplexMatrix& a) {
  Mat m = zeros(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return m;
}

inline double diff(const clonesim::ComplexMatrix& a, const Mat& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) worst = std::max(worst, std::abs(a(r, c) - b[r][c]));
  return worst;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat m = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

inline Mat dagger(const Mat& a) {
  Mat m = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) m[j][i] = std::conj(a[i][j]);
  return m;
}

/** Permutation matrix with column b sent to row image(b). */
template <typename F>
Mat permutation(std::size_t dim, F image) {
  Mat m = zeros(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) m[image(b)][b] = 1.0;
  return m;
}

/** |a, b> -> |a, a + b mod n>. */
inline Mat un(std::size_t n) {
  return permutation(n * n, [n](std::size_t idx) {
    const std::size_t a = idx / n, b = idx % n;
    return a * n + (a + b) % n;
  });
}

/** |a1 a2, b1 b2> -> |a1 a2, a1 + b1 mod k, a2 + b2 mod l>. */
inline Mat composite(std::size_t k, std::size_t l) {
  const std::size_t d = k * l;
  return permutation(d * d, [k, l, d](std::size_t idx) {
    const std::size_t a = idx / d, b = idx % d;
    const std::size_t a1 = a / l, a2 = a % l, b1 = b / l, b2 = b % l;
    return a * d + ((a1 + b1) % k) * l + (a2 + b2) % l;
  });
}

/** Generations 1..g of pairwise CNOTs on 2^g qubits, qubit 0 the top bit. */
inline Mat cnot_chain(std::size_t g) {
  const std::size_t q = std::size_t{1} << g;
  return permutation(std::size_t{1} << q, [g, q](std::size_t x) {
    for (std::size_t s = 1; s <= g; ++s) {
      const std::size_t m = std::size_t{1} << s;
      for (std::size_t i = 0; i < m / 2; ++i) {
        const std::size_t cbit = q - 1 - i, tbit = q - 1 - (i + m / 2);
        if ((x >> cbit) & 1) x ^= std::size_t{1} << tbit;
      }
    }
    return x;
  });
}

/** rho (x) |0..0><0..0| with `blank_dim` trailing blank dimensions. */
inline Mat with_blank(const Mat& rho, std::size_t blank_dim) {
  const std::size_t n = rho.size();
  Mat m = zeros(n * blank_dim, n * blank_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * blank_dim][j * blank_dim] = rho[i][j];
  return m;
}

/** Reduced state of subsystem `which` of a register of `count` equal factors of dimension d. */
inline Mat reduce(const Mat& rho, std::size_t d, std::size_t count, std::size_t which) {
  std::size_t stride = 1;
  for (std::size_t k = which + 1; k < count; ++k) stride *= d;
  Mat out = zeros(d, d);
  for (std::size_t r = 0; r < rho.size(); ++r)
    for (std::size_t c = 0; c < rho.size(); ++c) {
      const std::size_t ra = (r / stride) % d, ca = (c / stride) % d;
      if (r - ra * stride != c - ca * stride) continue;  // other factors must agree
      out[ra][ca] += rho[r][c];
    }
  return out;
}

inline C expect(const Mat& rho, const Mat& obs) {
  C s = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t j = 0; j < rho.size(); ++j) s += rho[i][j] * obs[j][i];
  return s;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat m = zeros(a.size() * b.size(), a[0].size() * b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[0].size(); ++l)
          m[i * b.size() + k][j * b[0].size() + l] = a[i][j] * b[k][l];
  return m;
}

/** exp(A) by a scaled Taylor series; fine for the small generators used here. */
inline Mat expm(const Mat& a) {
  const std::size_t n = a.size();
  Mat scaled = a;
  for (auto& row : scaled)
    for (auto& z : row) z /= 1024.0;
  Mat result = eye(n), term = eye(n);
  for (int k = 1; k < 30; ++k) {
    term = mul(term, scaled);
    for (auto& row : term)
      for (auto& z : row) z /= static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < 10; ++s) result = mul(result, result);
  return result;
}

/** exp[i theta/2 (cos(phi) X - sin(phi) Y)]. */
inline Mat carrier(double theta, double phi) {
  const C i{0.0, 1.0};
  // cos(phi) X - sin(phi) Y has off-diagonal entries e^{i phi} and e^{-i phi}.
  Mat gen{{0.0, std::polar(1.0, phi)}, {std::polar(1.0, -phi), 0.0}};
  for (auto& row : gen)
    for (auto& z : row) z *= i * theta / 2.0;
  return expm(gen);
}

/** max |a - e^{i p} b| minimized over the phase p read off the largest entry of b. */
inline double diff_up_to_phase(const Mat& a, const Mat& b) {
  std::size_t br = 0, bc = 0;
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c)
      if (std::abs(b[r][c]) > std::abs(b[br][bc])) br = r, bc = c;
  const C phase = a[br][bc] / b[br][bc];
  const C unit = phase / std::abs(phase);
  double worst = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      worst = std::max(worst, std::abs(a[r][c] - unit * b[r][c]));
  return worst;
}

}  // namespace oracle
