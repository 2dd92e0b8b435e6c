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

#include "clonesim/ion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clonesim/cloning.hpp"
#include "clonesim/pauli.hpp"

namespace clonesim {

namespace {

using std::numbers::pi;

constexpr Complex kI{0.0, 1.0};

GateExpansion make_expansion(std::string name, ComplexMatrix target, double phase,
                             std::vector<std::pair<double, double>> carriers) {
  GateExpansion e{std::move(name), std::move(target), phase, std::move(carriers), 0.0};
  e.deviation = max_abs_diff(e.product(), e.target);
  return e;
}

ComplexMatrix embed_two(const ComplexMatrix& g, std::size_t ion, std::size_t other_ion) {
  // 4x4 gate on the 2-ion register with `ion` as the more significant factor.
  if (ion == 0 && other_ion == 1) return g;
  ComplexMatrix swapped(4, 4);
  auto flip = [](std::size_t k) { return ((k & 1) << 1) | (k >> 1); };
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) swapped(flip(r), flip(c)) = g(r, c);
  return swapped;
}

ComplexMatrix logical_gate_matrix(const LogicalGate& gate, const ComplexMatrix& ms) {
  ComplexMatrix single(2, 2);
  switch (gate.kind) {
    case LogicalGateKind::kMs:
      return ms;
    case LogicalGateKind::kP:
      single = ComplexMatrix::diagonal({1.0, kI});
      break;
    case LogicalGateKind::kPInv:
      single = ComplexMatrix::diagonal({1.0, -kI});
      break;
    case LogicalGateKind::kH: {
      const double h = 1.0 / std::numbers::sqrt2;
      single = ComplexMatrix{{h, h}, {h, -h}};
      break;
    }
    case LogicalGateKind::kSigmaZ:
      single = pauli::z();
      break;
    case LogicalGateKind::kSigmaX:
      single = pauli::x();
      break;
  }
  return gate.ion == 0 ? tensor(single, pauli::identity()) : tensor(pauli::identity(), single);
}

constexpr LogicalGate kCnotFormula[] = {
    {LogicalGateKind::kSigmaX, 0}, {LogicalGateKind::kSigmaZ, 1}, {LogicalGateKind::kP, 0},
    {LogicalGateKind::kPInv, 1},   {LogicalGateKind::kH, 1},      {LogicalGateKind::kMs, 0},
    {LogicalGateKind::kP, 0},      {LogicalGateKind::kH, 0},      {LogicalGateKind::kP, 0},
    {LogicalGateKind::kMs, 0},     {LogicalGateKind::kP, 1},
};

void require_ion(std::size_t ion, std::size_t register_size) {
  if (ion >= register_size)
    throw DomainError("ion index " + std::to_string(ion) + " outside a register of " +
                      std::to_string(register_size));
}

void apply_single(ComplexMatrix& u, const ComplexMatrix& g, std::size_t ion, std::size_t nions) {
  const std::size_t bit = std::size_t{1} << (nions - 1 - ion);
  const std::size_t dim = u.rows();
  for (std::size_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & bit) continue;
    const std::size_t r1 = r0 | bit;
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex a = u(r0, c), b = u(r1, c);
      u(r0, c) = g(0, 0) * a + g(0, 1) * b;
      u(r1, c) = g(1, 0) * a + g(1, 1) * b;
    }
  }
}

void apply_two(ComplexMatrix& u, const ComplexMatrix& g, std::size_t ion_a, std::size_t ion_b,
               std::size_t nions) {
  const std::size_t ba = std::size_t{1} << (nions - 1 - ion_a);
  const std::size_t bb = std::size_t{1} << (nions - 1 - ion_b);
  const std::size_t dim = u.rows();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & (ba | bb)) continue;
    const std::size_t rows[4] = {base, base | bb, base | ba, base | ba | bb};
    for (std::size_t c = 0; c < dim; ++c) {
      Complex v[4];
      for (std::size_t k = 0; k < 4; ++k) v[k] = u(rows[k], c);
      for (std::size_t k = 0; k < 4; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < 4; ++j) acc += g(k, j) * v[j];
        u(rows[k], c) = acc;
      }
    }
  }
}

}  // namespace

double wrap_angle(double angle) {
  double a = std::fmod(angle, 2.0 * pi);
  if (a < 0.0) a += 2.0 * pi;
  if (a >= 2.0 * pi) a = 0.0;
  return a;
}

PulseProgram::PulseProgram(std::size_t register_size) : register_size_(register_size) {
  if (register_size == 0) throw DomainError("pulse program needs at least one ion");
}

void PulseProgram::add(PulsePrimitive pulse) {
  if (auto* c = std::get_if<Carrier>(&pulse)) {
    require_ion(c->ion, register_size_);
    c->theta = wrap_angle(c->theta);
    c->phi = wrap_angle(c->phi);
    ++counts_.total_gates;
  } else if (auto* ms = std::get_if<MolmerSorensen>(&pulse)) {
    require_ion(ms->ion_a, register_size_);
    require_ion(ms->ion_b, register_size_);
    if (ms->ion_a == ms->ion_b) throw DomainError("MS gate needs two distinct ions");
    ++counts_.total_gates;
    ++counts_.two_qubit_gates;
  } else {
    auto& ph = std::get<GlobalPhase>(pulse);
    ph.phi = wrap_angle(ph.phi);
  }
  pulses_.push_back(pulse);
}

void PulseProgram::append(const PulseProgram& other) {
  if (other.register_size_ > register_size_)
    throw DimensionError("cannot append a program on a larger register");
  for (const auto& p : other.pulses_) add(p);
}

GateCounts PulseProgram::count(std::span<const PulsePrimitive> pulses) {
  GateCounts c;
  for (const auto& p : pulses) {
    if (std::holds_alternative<Carrier>(p)) {
      ++c.total_gates;
    } else if (std::holds_alternative<MolmerSorensen>(p)) {
      ++c.total_gates;
      ++c.two_qubit_gates;
    }
  }
  return c;
}

ComplexMatrix carrier(double theta, double phi) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  // cos I + i sin (cos(phi) X - sin(phi) Y)
  return ComplexMatrix{{c, kI * s * std::polar(1.0, phi)},
                       {kI * s * std::polar(1.0, -phi), c}};
}

std::string_view to_string(MsVariant v) {
  switch (v) {
    case MsVariant::kPlusXX: return "exp(+i pi/4 XX)";
    case MsVariant::kMinusXX: return "exp(-i pi/4 XX)";
    case MsVariant::kPlusYY: return "exp(+i pi/4 YY)";
    case MsVariant::kMinusYY: return "exp(-i pi/4 YY)";
  }
  return "?";
}

ComplexMatrix ms_matrix(MsVariant v) {
  const bool xx = v == MsVariant::kPlusXX || v == MsVariant::kMinusXX;
  const double sign = (v == MsVariant::kPlusXX || v == MsVariant::kPlusYY) ? 1.0 : -1.0;
  const ComplexMatrix pp = xx ? tensor(pauli::x(), pauli::x()) : tensor(pauli::y(), pauli::y());
  // (P(x)P)^2 = I, so exp(i a P(x)P) = cos(a) I + i sin(a) P(x)P.
  return Complex(std::cos(pi / 4)) * ComplexMatrix::identity(4) +
         Complex(0.0, sign * std::sin(pi / 4)) * pp;
}

ComplexMatrix GateExpansion::product() const {
  ComplexMatrix m = ComplexMatrix::identity(2);
  for (const auto& [theta, phi] : carriers) m = m * carrier(theta, phi);
  return std::polar(1.0, phase) * m;
}

std::string_view to_string(CnotReading r) {
  return r == CnotReading::kMatrixProduct ? "matrix-product" : "time-ordered";
}

std::span<const LogicalGate> cnot_formula() { return kCnotFormula; }

ComplexMatrix cnot_formula_matrix(const ComplexMatrix& ms, CnotReading reading) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (const auto& gate : kCnotFormula) {
    const ComplexMatrix g = logical_gate_matrix(gate, ms);
    m = reading == CnotReading::kMatrixProduct ? m * g : g * m;
  }
  return std::polar(1.0, kCnotFormulaPhase) * m;
}

ComplexMatrix cnot_12() {
  return ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                       {0.0, 1.0, 0.0, 0.0},
                       {0.0, 0.0, 0.0, 1.0},
                       {0.0, 0.0, 1.0, 0.0}};
}

ComplexMatrix cnot_21() { return embed_two(cnot_12(), 1, 0); }

const GateExpansion& GateLibrary::expansion(LogicalGateKind kind) const {
  switch (kind) {
    case LogicalGateKind::kP: return p;
    case LogicalGateKind::kPInv: return p_inv;
    case LogicalGateKind::kH: return h;
    case LogicalGateKind::kSigmaZ: return sigma_z;
    case LogicalGateKind::kSigmaX: return sigma_x;
    case LogicalGateKind::kMs: break;
  }
  throw DomainError("the MS gate has no single-ion expansion");
}

GateLibrary build_gate_library() {
  const double h = 1.0 / std::numbers::sqrt2;
  GateLibrary lib{
      make_expansion("P", ComplexMatrix::diagonal({1.0, kI}), -3.0 * pi / 4,
                     {{pi, 0.0}, {pi, pi / 4}}),
      // Inverse of the P expansion, using R(theta, phi)^-1 = R(theta, phi + pi).
      make_expansion("P^-1", ComplexMatrix::diagonal({1.0, -kI}), 3.0 * pi / 4,
                     {{pi, 5.0 * pi / 4}, {pi, pi}}),
      make_expansion("H", ComplexMatrix{{h, h}, {h, -h}}, -pi / 2, {{pi, 0.0}, {pi / 2, pi / 2}}),
      make_expansion("sigma_z", pauli::z(), -pi / 2, {{pi, 0.0}, {pi, pi / 2}}),
      make_expansion("sigma_x", pauli::x(), -pi / 2, {{pi, 0.0}}),
      MsVariant::kPlusXX,
      ComplexMatrix::identity(4),
      {},
      CnotReading::kMatrixProduct,
      0.0,
      0.0,
  };
  for (const GateExpansion* e : {&lib.p, &lib.p_inv, &lib.h, &lib.sigma_z, &lib.sigma_x}) {
    if (!(e->deviation <= kTolVerify))
      throw Error("gate library: expansion of " + e->name + " misses its target by " +
                  std::to_string(e->deviation));
  }

  const ComplexMatrix target = cnot_12();
  bool found = false;
  for (std::size_t k = 0; k < kMsVariants.size(); ++k) {
    const ComplexMatrix ms = ms_matrix(kMsVariants[k]);
    lib.ms_candidate_deviation[k] = max_abs_diff_up_to_phase(
        cnot_formula_matrix(ms, CnotReading::kMatrixProduct), target);
    if (!found && lib.ms_candidate_deviation[k] <= kTolVerify) {
      found = true;
      lib.ms_variant = kMsVariants[k];
      lib.ms = ms;
    }
  }
  if (!found) {
    for (const MsVariant v : kMsVariants) {
      const ComplexMatrix ms = ms_matrix(v);
      if (max_abs_diff_up_to_phase(cnot_formula_matrix(ms, CnotReading::kTimeOrdered), target) <=
          kTolVerify) {
        found = true;
        lib.ms_variant = v;
        lib.ms = ms;
        break;
      }
    }
  }
  if (!found) throw Error("gate library: no MS convention closes the CNOT formula");

  lib.cnot_deviation_matrix_product =
      max_abs_diff_up_to_phase(cnot_formula_matrix(lib.ms, CnotReading::kMatrixProduct), target);
  lib.cnot_deviation_time_ordered =
      max_abs_diff_up_to_phase(cnot_formula_matrix(lib.ms, CnotReading::kTimeOrdered), target);
  lib.cnot_reading = lib.cnot_deviation_matrix_product <= kTolVerify ? CnotReading::kMatrixProduct
                                                                     : CnotReading::kTimeOrdered;
  return lib;
}

const GateLibrary& gate_library() {
  static const GateLibrary lib = build_gate_library();
  return lib;
}

PulseProgram compile_cnot(std::size_t control, std::size_t target, std::size_t register_size) {
  if (control == target) throw DomainError("compile_cnot: control and target must differ");
  if (register_size == 0) register_size = std::max(control, target) + 1;
  const GateLibrary& lib = gate_library();
  PulseProgram program(register_size);
  require_ion(control, register_size);
  require_ion(target, register_size);

  auto emit = [&](const LogicalGate& gate) {
    if (gate.kind == LogicalGateKind::kMs) {
      program.add(MolmerSorensen{control, target});
      return;
    }
    const std::size_t ion = gate.ion == 0 ? control : target;
    const GateExpansion& e = lib.expansion(gate.kind);
    for (auto it = e.carriers.rbegin(); it != e.carriers.rend(); ++it)
      program.add(Carrier{ion, it->first, it->second});
    program.add(GlobalPhase{e.phase});
  };

  const auto formula = cnot_formula();
  if (lib.cnot_reading == CnotReading::kMatrixProduct) {
    for (auto it = formula.rbegin(); it != formula.rend(); ++it) emit(*it);
  } else {
    for (const auto& gate : formula) emit(gate);
  }
  program.add(GlobalPhase{kCnotFormulaPhase});
  return program;
}

std::string_view to_string(RegisterKind k) { return k == RegisterKind::kQubit ? "qubit" : "qutrit"; }

std::size_t register_size_for(std::size_t g, RegisterKind kind) {
  const std::size_t individuals = std::size_t{1} << g;
  return kind == RegisterKind::kQubit ? individuals : 2 * individuals;
}

PulseProgram compile_generation(std::size_t g, RegisterKind kind) {
  const std::size_t max_g = kind == RegisterKind::kQubit ? 3 : 2;
  if (g > max_g)
    throw DomainError("compile_generation: " + std::string(to_string(kind)) +
                      " generation must be at most " + std::to_string(max_g));
  const std::size_t nions = register_size_for(g, kind);
  PulseProgram program(nions);
  for (std::size_t s = 1; s <= g; ++s) {
    const std::size_t m = std::size_t{1} << s;  // individuals after this step
    for (std::size_t i = 0; i < m / 2; ++i) {
      const std::size_t partner = i + m / 2;
      if (kind == RegisterKind::kQubit) {
        program.append(compile_cnot(i, partner, nions));
      } else {
        // Block A = CNOT12 * CNOT21 on the partner's ion pair: CNOT21 acts first.
        const std::size_t hi = 2 * partner, lo = 2 * partner + 1;
        program.append(compile_cnot(lo, hi, nions));
        program.append(compile_cnot(hi, lo, nions));
      }
    }
  }
  return program;
}

ComplexMatrix primitive_matrix(const PulsePrimitive& pulse, const GateLibrary& lib) {
  if (const auto* c = std::get_if<Carrier>(&pulse)) return carrier(c->theta, c->phi);
  if (std::holds_alternative<MolmerSorensen>(pulse)) return lib.ms;
  return ComplexMatrix{{std::polar(1.0, std::get<GlobalPhase>(pulse).phi)}};
}

UnitaryMatrix evaluate_program(const PulseProgram& program) {
  const std::size_t nions = program.register_size();
  if (nions > kMaxQubits) throw CapacityError("evaluate_program: more than 8 ions");
  const GateLibrary& lib = gate_library();
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << nions);
  for (const auto& pulse : program.pulses()) {
    if (const auto* c = std::get_if<Carrier>(&pulse)) {
      require_ion(c->ion, nions);
      apply_single(u, carrier(c->theta, c->phi), c->ion, nions);
    } else if (const auto* ms = std::get_if<MolmerSorensen>(&pulse)) {
      require_ion(ms->ion_a, nions);
      require_ion(ms->ion_b, nions);
      apply_two(u, lib.ms, ms->ion_a, ms->ion_b, nions);
    } else {
      u *= std::polar(1.0, std::get<GlobalPhase>(pulse).phi);
    }
  }
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix build_qutrit_embedding() {
  const ComplexMatrix second{{1.0, 0.0, 0.0, 0.0},
                             {0.0, 0.0, 0.0, 1.0},
                             {0.0, 1.0, 0.0, 0.0},
                             {0.0, 0.0, 1.0, 0.0}};
  const ComplexMatrix third{{1.0, 0.0, 0.0, 0.0},
                            {0.0, 0.0, 1.0, 0.0},
                            {0.0, 0.0, 0.0, 1.0},
                            {0.0, 1.0, 0.0, 0.0}};
  return UnitaryMatrix(direct_sum({ComplexMatrix::identity(4), second, third}));
}

QutritEmbeddingCheck check_qutrit_embedding() {
  const ComplexMatrix u = build_qutrit_embedding().matrix();
  const ComplexMatrix c12 = cnot_12(), c21 = cnot_21();
  auto order_of = [&](const ComplexMatrix& b) -> std::string {
    if (b == c12 * c21) return "CNOT12*CNOT21";
    if (b == c21 * c12) return "CNOT21*CNOT12";
    return "none";
  };
  QutritEmbeddingCheck check;
  check.first_block_identity = block(u, 0, 4) == ComplexMatrix::identity(4);
  check.second_block_order = order_of(block(u, 4, 4));
  check.third_block_order = order_of(block(u, 8, 4));
  check.restriction_matches = qutrit_logical_restriction(u) == build_un(3).matrix();
  return check;
}

ComplexMatrix qutrit_logical_restriction(const ComplexMatrix& embedding) {
  if (embedding.rows() != 12 || embedding.cols() != 12)
    throw DimensionError("qutrit_logical_restriction: expects the 12x12 embedding");
  ComplexMatrix out(9, 9);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b_out = 0; b_out < 3; ++b_out)
      for (std::size_t b_in = 0; b_in < 3; ++b_in)
        out(a * 3 + b_out, a * 3 + b_in) = embedding(a * 4 + b_out + 1, a * 4 + b_in + 1);
  return out;
}

UnitaryMatrix qutrit_embedding_on_ions() {
  const ComplexMatrix u = build_qutrit_embedding().matrix();
  ComplexMatrix out(16, 16);
  for (std::size_t t = 0; t < 4; ++t) out(t, t) = 1.0;
  for (std::size_t c = 1; c < 4; ++c) {
    const ComplexMatrix b = block(u, (c - 1) * 4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k) out(c * 4 + r, c * 4 + k) = b(r, k);
  }
  return UnitaryMatrix(std::move(out));
}

}  // namespace clonesim
