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


// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clonesim/classicality.hpp"
#include "clonesim/cli.hpp"
#include "clonesim/cloning.hpp"
#include "clonesim/ion.hpp"
#include "clonesim/observables.hpp"
#include "clonesim/pauli.hpp"
#include "clonesim/rotation.hpp"
#include "clonesim/verify.hpp"

using namespace clonesim;

namespace {

constexpr double kTol = 1e-10;
constexpr std::size_t kTrials = 100;

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d  %-28s %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!pass) ++failures;
}

std::string dev(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", d);
  return buf;
}

void criterion_1() {
  Rng rng(kDefaultSeed);
  double worst = 0.0;
  for (std::size_t n = 2; n <= 6; ++n)
    worst = std::max(worst, check_cloning(build_un(n), kTrials, rng, kTol, "c1").max_deviation);
  report(1, "cloning n=2..6", worst <= kTol, "max dev " + dev(worst));
}

void criterion_2() {
  Rng rng(kDefaultSeed);
  double worst = 0.0;
  for (std::size_t n : {2u, 4u, 6u})
    worst = std::max(worst, check_transmission(build_un(n), exchange_tau(n), kTrials, rng, kTol,
                                               "c2").max_deviation);
  double closed = 0.0;
  const ComplexMatrix xx = tensor(pauli::x(), pauli::x());
  for (std::size_t t = 0; t < kTrials; ++t) {
    const DensityMatrix rho = rng.density(2);
    const DensityMatrix out = clone_output(build_un(2).unitary(), rho);
    closed = std::max(closed, std::abs(expectation(out, xx) - 2.0 * rho.matrix()(0, 1).real()));
  }
  report(2, "transmission n=2,4,6", worst <= kTol && closed <= kTol,
         "max dev " + dev(worst) + ", closed form " + dev(closed));
}

void criterion_3() {
  Rng rng(kDefaultSeed);
  const CheckRecord r = check_full_statistics(kTrials, rng, kTol);
  report(3, "full statistics n=2", r.pass, "max dev " + dev(r.max_deviation));
}

void criterion_4() {
  Rng rng(kDefaultSeed);
  double worst = 0.0;
  bool pass = true;
  for (std::size_t g = 1; g <= 3; ++g) {
    const CheckRecord r = check_sequential(g, kTrials, rng, kTol);
    worst = std::max(worst, r.max_deviation);
    pass = pass && r.pass;
  }
  report(4, "sequential g=1..3", pass, "max dev " + dev(worst));
}

void criterion_5() {
  Rng rng(kDefaultSeed);
  double worst = 0.0, min_diff = 1e300;
  for (auto [k, l] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}}) {
    const CloningUnitary c = build_composite(k, l);
    worst = std::max(worst, check_cloning(c, kTrials, rng, kTol, "c5").max_deviation);
    min_diff = std::min(min_diff, max_abs_diff(c.matrix(), build_un(6).matrix()));
  }
  report(5, "composite (2,3) and (3,2)", worst <= kTol && min_diff >= 0.5,
         "max dev " + dev(worst) + ", differs from U_6 by " + dev(min_diff));
}

void criterion_6() {
  bool scan_ok = true;
  std::string found;
  for (long d : {2L, 4L, 6L, 8L}) {
    const std::set<DegeneracyTriple> expected{{d, 0, 0}, {0, d, 0}, {0, 0, d}, {d / 2, 0, d / 2}};
    const auto sols = scan_degeneracy_solutions(d);
    const std::set<DegeneracyTriple> got(sols.begin(), sols.end());
    if (got != expected) scan_ok = false;
    found += " d=" + std::to_string(d) + ":";
    for (const auto& t : sols)
      found += "(" + std::to_string(t.l1) + "," + std::to_string(t.l0) + "," +
               std::to_string(t.lm1) + ")";
  }
  bool flip_ok = true;
  for (std::size_t d : {2u, 4u}) {
    const ComplexMatrix f = build_flip_operator(d).matrix();
    const ComplexMatrix dd = lemma_diagonal_form(d);
    flip_ok = flip_ok && max_abs_diff(f * tensor(dd, dd) * f.adjoint(),
                                      tensor(pauli::z(), ComplexMatrix::identity(d * d / 2))) <= kTol;
  }
  bool spectrum_ok = true;
  for (std::size_t n = 2; n <= 8; ++n) {
    if (n % 2 == 0) spectrum_ok = spectrum_ok && lemma_spectrum_check(exchange_tau(n)).satisfies_lemma;
    for (std::uint32_t bits = 0; bits + 1 < (1u << n); ++bits)
      if (pattern_is_hermitian(n, bits))
        spectrum_ok = spectrum_ok && !lemma_spectrum_check(antidiagonal_pattern(n, bits)).satisfies_lemma;
  }
  std::string detail = std::string("flip ") + (flip_ok ? "ok" : "broken") + ", spectrum " +
                       (spectrum_ok ? "ok" : "broken") + ", scan " +
                       (scan_ok ? "matches" : "differs: (0,0,d) is not a solution;") + found;
  report(6, "lemma suite", scan_ok && flip_ok && spectrum_ok, detail);
}

void criterion_7() {
  bool pass = classify_operation(pairwise_step(2).matrix()).is_classical;
  for (std::size_t n = 3; n <= 6; ++n) pass = pass && classify_operation(build_un(n).matrix()).is_classical;
  pass = pass && classify_operation(build_composite(2, 3).matrix()).is_classical;
  pass = pass && !classify_operation(build_ux().matrix()).is_classical;
  report(7, "classicality verdicts", pass, "CNOT, U_3..U_6, U'_23 classical; U_x quantum");
}

void criterion_8() {
  struct Cell {
    std::size_t g;
    RegisterKind kind;
    std::size_t total, two, ions;
  };
  const Cell cells[] = {{1, RegisterKind::kQubit, 19, 2, 2},
                        {2, RegisterKind::kQubit, 57, 6, 4},
                        {3, RegisterKind::kQubit, 133, 14, 8},
                        {1, RegisterKind::kQutrit, 38, 4, 4},
                        {2, RegisterKind::kQutrit, 114, 12, 8}};
  bool pass = true;
  std::string detail;
  for (const Cell& c : cells) {
    const PulseProgram p = compile_generation(c.g, c.kind);
    pass = pass && p.counts().total_gates == c.total && p.counts().two_qubit_gates == c.two &&
           p.register_size() == c.ions;
    detail += std::to_string(p.counts().total_gates) + "(" +
              std::to_string(p.counts().two_qubit_gates) + ")/" +
              std::to_string(p.register_size()) + " ";
  }
  report(8, "gate count table", pass, detail);
}

void criterion_9() {
  const GateLibrary lib = build_gate_library();
  double worst = 0.0;
  for (const GateExpansion* e : {&lib.p, &lib.p_inv, &lib.h, &lib.sigma_z, &lib.sigma_x})
    worst = std::max(worst, e->deviation);
  const double cnot = lib.cnot_reading == CnotReading::kMatrixProduct
                          ? lib.cnot_deviation_matrix_product
                          : lib.cnot_deviation_time_ordered;
  const QutritEmbeddingCheck q = check_qutrit_embedding();
  const bool embed = q.first_block_identity && q.second_block_order != "none" &&
                     q.third_block_order != "none" && q.restriction_matches;
  report(9, "gate identities", worst <= kTol && cnot <= kTol && embed,
         "expansions " + dev(worst) + ", CNOT " + dev(cnot) + " with " +
             std::string(to_string(lib.ms_variant)) + ", qutrit blocks " + q.second_block_order +
             " / " + q.third_block_order);
}

void criterion_10() {
  double worst = 0.0;
  for (std::size_t g = 1; g <= 2; ++g)
    worst = std::max(worst, max_abs_diff_up_to_phase(
                                evaluate_program(compile_generation(g, RegisterKind::kQubit)).matrix(),
                                generation_unitary(g).matrix()));
  report(10, "pulse program equivalence", worst <= kTol, "max dev " + dev(worst));
}

void criterion_11() {
  Rng rng(kDefaultSeed);
  const ObservablePair pair(rng.diagonal_observable(2), exchange_tau(2));
  const UnitaryMatrix rotations[] = {rotation_preset("identity", 2),
                                     rotation_preset("hadamard", 2), rng.unitary(2)};
  double worst = 0.0;
  bool pass = true;
  for (const UnitaryMatrix& r : rotations) {
    const RotatedCloningSetup s = rotate_setup(build_un(2), pair, r);
    VerificationReport rep = verify_rotated_transmission(s, kTrials, rng, kTol);
    rep.add(verify_rotated_cloning(s, kTrials, rng, kTol));
    pass = pass && rep.all_pass();
    worst = std::max(worst, rep.max_deviation());
  }
  report(11, "rotated bases", pass, "max dev " + dev(worst));
}

void criterion_12() {
  auto once = [] {
    const char* argv[] = {"clonesim", "verify", "--n", "2", "--generations", "3",
                          "--trials", "20", "--deterministic"};
    std::ostringstream out, err;
    const int code = cli_main(9, argv, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = once(), b = once();
  report(12, "deterministic reports", a.first == kExitPass && a.second == b.second,
         std::to_string(a.second.size()) + " bytes, " +
             (a.second == b.second ? "identical" : "different"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
