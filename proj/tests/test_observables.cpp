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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "clonesim/errors.hpp"
#include "clonesim/observables.hpp"
#include "clonesim/pauli.hpp"
#include "clonesim/random.hpp"
#include "clonesim/verify.hpp"
#include "oracles.hpp"

using namespace clonesim;

namespace {

// Spectrum of a 0/1 Hermitian antidiagonal pattern from two traces: the
// eigenvalues lie in {-1, 0, 1}, so Tr(tau) = l+ - l- and Tr(tau^2) = l+ + l-.
struct TraceSpectrum {
  long plus, zero, minus;
};
TraceSpectrum trace_spectrum(const ComplexMatrix& tau) {
  const long t1 = std::lround(tau.trace().real());
  const long t2 = std::lround((tau * tau).trace().real());
  const long n = static_cast<long>(tau.rows());
  return {(t2 + t1) / 2, n - t2, (t2 - t1) / 2};
}

}  // namespace

TEST_CASE("observable pair validation") {
  CHECK_NOTHROW(ObservablePair(pauli::z(), pauli::x()));
  CHECK_THROWS_AS(ObservablePair(pauli::x(), pauli::x()), InvariantError);
  CHECK_THROWS_AS(ObservablePair(pauli::z(), pauli::z()), InvariantError);
  CHECK_THROWS_AS(ObservablePair(pauli::z(), 0.5 * pauli::x()), InvariantError);
  CHECK_THROWS_AS(ObservablePair(pauli::z(), ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}),
                  InvariantError);
  CHECK_THROWS_AS(ObservablePair(pauli::z(), ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("antidiagonal patterns") {
  const ComplexMatrix p = antidiagonal_pattern(4, 0b1001);
  CHECK(p(0, 3) == Complex(1.0));
  CHECK(p(3, 0) == Complex(1.0));
  CHECK(p(1, 2) == Complex(0.0));
  CHECK(pattern_string(4, 0b1001) == "1001");
  CHECK(pattern_string(3, 0b001) == "100");
  CHECK(pattern_is_hermitian(4, 0b0110));
  CHECK_FALSE(pattern_is_hermitian(3, 0b001));
}

TEST_CASE("exchange tau is the full antidiagonal") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const ComplexMatrix t = exchange_tau(n);
    for (std::size_t k = 0; k < n; ++k) CHECK(t(k, n - 1 - k) == Complex(1.0));
  }
}

TEST_CASE("transmission holds for every Hermitian pattern") {
  // Frozen from an exhaustive scan: every palindrome transmits
  // under U_n, and nothing else is scanned.
  const std::set<std::string> n3{"000", "010", "101", "111"};
  const std::set<std::string> n5{"00000", "00100", "01010", "01110",
                                 "10001", "10101", "11011", "11111"};
  for (auto [n, expected] : {std::pair{std::size_t{3}, n3}, std::pair{std::size_t{5}, n5}}) {
    std::set<std::string> passing;
    for (const auto& c : scan_tau_patterns(build_un(n), n))
      if (c.passes) passing.insert(c.pattern);
    CHECK(passing == expected);
    CHECK(search_tau(build_un(n), n).size() == expected.size() - 1);
  }
}

TEST_CASE("transmission of tau against an oracle path") {
  Rng rng(31);
  for (std::size_t n : {2u, 4u, 6u}) {
    const oracle::Mat u = oracle::un(n);
    const ComplexMatrix tau = exchange_tau(n);
    const oracle::Mat tt = oracle::kron(oracle::from(tau), oracle::from(tau));
    for (int trial = 0; trial < 10; ++trial) {
      const DensityMatrix rho = rng.density(n);
      const oracle::Mat out = oracle::mul(
          oracle::mul(u, oracle::with_blank(oracle::from(rho.matrix()), n)), oracle::dagger(u));
      const oracle::C lhs = oracle::expect(oracle::from(rho.matrix()), oracle::from(tau));
      CHECK(std::abs(oracle::expect(out, tt) - lhs) < 1e-12);
      CHECK(transmit_deviation(build_un(n).unitary(), rho, tau) < kTolVerify);
    }
  }
}

TEST_CASE("spectrum check agrees with the trace oracle on all patterns") {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      if (!pattern_is_hermitian(n, bits)) continue;
      const ComplexMatrix tau = antidiagonal_pattern(n, bits);
      const TauSpectrumReport r = lemma_spectrum_check(tau);
      const TraceSpectrum t = trace_spectrum(tau);
      CHECK(static_cast<long>(r.lambda_plus) == t.plus);
      CHECK(static_cast<long>(r.lambda_zero) == t.zero);
      CHECK(static_cast<long>(r.lambda_minus) == t.minus);
      CHECK(r.unclassified == 0);
      const bool full = bits == (1u << n) - 1;
      CHECK(r.satisfies_lemma == (full && n % 2 == 0));
    }
  }
}

TEST_CASE("degeneracy equations") {
  CHECK(verify_degeneracy_equations(2, 0, 2, 4));
  CHECK(verify_degeneracy_equations(0, 4, 0, 4));
  CHECK(verify_degeneracy_equations(4, 0, 0, 4));
  CHECK_FALSE(verify_degeneracy_equations(0, 0, 4, 4));
  CHECK_FALSE(verify_degeneracy_equations(1, 2, 1, 4));
  CHECK_THROWS_AS(verify_degeneracy_equations(1, 1, 1, 4), DomainError);
  // Brute-force oracle over all triples.
  for (long d : {2L, 4L, 6L, 8L, 10L}) {
    std::vector<DegeneracyTriple> brute;
    for (long a = 0; a <= d; ++a)
      for (long b = 0; a + b <= d; ++b) {
        const long c = d - a - b;
        if (d * a == a * a + c * c && d * b == b * (2 * d - b) && d * c == 2 * a * c)
          brute.push_back({a, b, c});
      }
    std::sort(brute.begin(), brute.end());
    CHECK(scan_degeneracy_solutions(d) == brute);
    const std::vector<DegeneracyTriple> frozen{{0, d, 0}, {d / 2, 0, d / 2}, {d, 0, 0}};
    CHECK(scan_degeneracy_solutions(d) == frozen);
  }
}

TEST_CASE("flip operator conjugation identity") {
  for (std::size_t d : {2u, 4u, 6u}) {
    const UnitaryMatrix f = build_flip_operator(d);
    const ComplexMatrix dd = lemma_diagonal_form(d);
    const ComplexMatrix lhs = f.matrix() * tensor(dd, dd) * f.matrix().adjoint();
    CHECK(max_abs_diff(lhs, tensor(pauli::z(), ComplexMatrix::identity(d * d / 2))) == 0.0);
  }
  CHECK_THROWS_AS(build_flip_operator(3), DomainError);
}

TEST_CASE("lemma unitary maps tau (x) tau to tau (x) 1") {
  Rng rng(77);
  for (std::size_t d : {2u, 4u}) {
    const UnitaryMatrix v = rng.unitary(d);
    const std::size_t half = d * d / 2;
    const UnitaryMatrix u = lemma_construct_unitary(v, rng.unitary(half), rng.unitary(half));
    const ComplexMatrix tau = v.matrix() * lemma_diagonal_form(d) * v.matrix().adjoint();
    const ComplexMatrix lhs = u.matrix() * tensor(tau, tau) * u.matrix().adjoint();
    CHECK(max_abs_diff(lhs, tensor(tau, ComplexMatrix::identity(d))) < 1e-10);
  }
}
