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

#include <array>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "clonesim/matrix.hpp"

namespace clonesim {

// Trapped-ion compilation of the cloning protocol.
//
// Ions are 0-based; ion 0 is the leftmost tensor factor of the register.
// Single-ion pulses are carrier transitions
//
//   R(theta, phi) = cos(theta/2) I + i sin(theta/2) (cos(phi) X - sin(phi) Y)
//                 = exp[i theta/2 (e^{i phi} s+ + e^{-i phi} s-)],  s+ = |0><1|,
//
// the two-ion primitive is a Molmer-Sorensen gate, and global phases are
// explicit primitives that never count as gates.

/** Maps any angle into [0, 2 pi). */
double wrap_angle(double angle);

struct Carrier {
  std::size_t ion;
  double theta;
  double phi;
};
struct MolmerSorensen {
  std::size_t ion_a;
  std::size_t ion_b;
};
struct GlobalPhase {
  double phi;
};
using PulsePrimitive = std::variant<Carrier, MolmerSorensen, GlobalPhase>;

struct GateCounts {
  std::size_t total_gates = 0;
  std::size_t two_qubit_gates = 0;
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/** Ordered pulses on a fixed register, with running gate counts. */
class PulseProgram {
 public:
  explicit PulseProgram(std::size_t register_size);

  /** Validates ion indices and wraps angles into [0, 2 pi). */
  void add(PulsePrimitive pulse);
  void append(const PulseProgram& other);

  std::size_t register_size() const { return register_size_; }
  const std::vector<PulsePrimitive>& pulses() const { return pulses_; }
  const GateCounts& counts() const { return counts_; }

  /** Counts recomputed from a pulse list: carrier = 1, MS = 1 (two-qubit), phase = 0. */
  static GateCounts count(std::span<const PulsePrimitive> pulses);

 private:
  std::size_t register_size_;
  std::vector<PulsePrimitive> pulses_;
  GateCounts counts_;
};

ComplexMatrix carrier(double theta, double phi);

enum class MsVariant { kPlusXX, kMinusXX, kPlusYY, kMinusYY };
inline constexpr std::array<MsVariant, 4> kMsVariants = {
    MsVariant::kPlusXX, MsVariant::kMinusXX, MsVariant::kPlusYY, MsVariant::kMinusYY};
std::string_view to_string(MsVariant v);
/** exp(+-i pi/4 X(x)X) or exp(+-i pi/4 Y(x)Y). */
ComplexMatrix ms_matrix(MsVariant v);

/** A single-ion gate as e^{i phase} R(theta_1, phi_1) R(theta_2, phi_2) ... */
struct GateExpansion {
  std::string name;
  ComplexMatrix target;
  double phase = 0.0;
  /** (theta, phi) factors in matrix-product order; the last one acts first. */
  std::vector<std::pair<double, double>> carriers;
  /** max |target - e^{i phase} prod R| with the phase included. */
  double deviation = 0.0;

  ComplexMatrix product() const;
};

/** How the CNOT product formula is read. */
enum class CnotReading {
  kMatrixProduct,  // as a matrix product: the rightmost factor acts first
  kTimeOrdered,    // factors applied left to right in time
};
std::string_view to_string(CnotReading r);

enum class LogicalGateKind { kP, kPInv, kH, kSigmaZ, kSigmaX, kMs };

/** One factor of the CNOT formula; `ion` is 0 (control) or 1 (target), unused for kMs. */
struct LogicalGate {
  LogicalGateKind kind;
  std::size_t ion;
};

/**
 * U_CNOT = -(X (x) Z) P_1 P_2^-1 H_2 R P_1 H_1 P_1 R P_2, with ion 1 the
 * control. Factors are listed as written; the leading minus sign is a global
 * phase of pi.
 */
std::span<const LogicalGate> cnot_formula();
inline constexpr double kCnotFormulaPhase = std::numbers::pi;

struct GateLibrary {
  GateExpansion p;
  GateExpansion p_inv;
  GateExpansion h;
  GateExpansion sigma_z;
  GateExpansion sigma_x;
  MsVariant ms_variant;
  ComplexMatrix ms;
  /** CNOT-formula deviation (up to global phase) per MS candidate, matrix-product reading. */
  std::array<double, 4> ms_candidate_deviation;
  CnotReading cnot_reading;
  double cnot_deviation_matrix_product;
  double cnot_deviation_time_ordered;

  const GateExpansion& expansion(LogicalGateKind kind) const;
};

/**
 * Builds every gate expansion and recovers the MS convention and the formula
 * reading by trying the candidates. Throws Error if an expansion misses its
 * target by more than kTolVerify or no candidate closes the CNOT formula.
 */
GateLibrary build_gate_library();
/** Cached build_gate_library(). */
const GateLibrary& gate_library();

/** Matrix of the CNOT formula built from ideal gates, for a given MS and reading. */
ComplexMatrix cnot_formula_matrix(const ComplexMatrix& ms, CnotReading reading);

/**
 * Pulse program for a CNOT between two ions. register_size = 0 means the
 * smallest register holding both ions.
 */
PulseProgram compile_cnot(std::size_t control, std::size_t target, std::size_t register_size = 0);

enum class RegisterKind { kQubit, kQutrit };
std::string_view to_string(RegisterKind k);

/**
 * Cloning generations 1..g compiled to pulses. Qubits use one ion each
 * (g <= 3); qutrits use an ion pair each (g <= 2), and every qutrit clone
 * costs the two interchanged CNOTs of its nontrivial embedding blocks on the
 * target pair.
 */
PulseProgram compile_generation(std::size_t g, RegisterKind kind);

/** Ion count for a generation: 2^g qubits or 2 * 2^g for qutrits. */
std::size_t register_size_for(std::size_t g, RegisterKind kind);

/**
 * Register unitary of a program: pulses left-multiplied in program order,
 * each embedded by identity padding. Register size must be <= 8.
 */
UnitaryMatrix evaluate_program(const PulseProgram& program);

/** Matrix of a primitive on its own ions (2x2, 4x4 or 1x1 phase). */
ComplexMatrix primitive_matrix(const PulsePrimitive& pulse, const GateLibrary& lib);

// Qutrit embedding. Each qutrit level k is stored on an ion pair as the
// two-ion basis state k + 1 (|01>, |10>, |11>); |00> is the ancillary level.

/** I_4 (+) A (+) B, the 12x12 three-block form of the qutrit cloner. */
UnitaryMatrix build_qutrit_embedding();

struct QutritEmbeddingCheck {
  bool first_block_identity = false;
  /** "CNOT12*CNOT21", "CNOT21*CNOT12" or "none" (matrix-product order). */
  std::string second_block_order;
  std::string third_block_order;
  /** The 9x9 action on encoded levels equals the two-qutrit cloner exactly. */
  bool restriction_matches = false;
};

/** Exact (integer) checks of the embedding blocks against two-CNOT products. */
QutritEmbeddingCheck check_qutrit_embedding();

/** 9x9 action of the 12x12 embedding on encoded qutrit basis states. */
ComplexMatrix qutrit_logical_restriction(const ComplexMatrix& embedding);

/**
 * The embedding on two ion pairs (16x16): control pair state c >= 1 selects
 * block c - 1 acting on the target pair; c = 0 (ancillary) acts as identity.
 */
UnitaryMatrix qutrit_embedding_on_ions();

/** 0-based CNOT on 2 ions as a 4x4 matrix: "12" = control ion 0, "21" = control ion 1. */
ComplexMatrix cnot_12();
ComplexMatrix cnot_21();

}  // namespace clonesim
