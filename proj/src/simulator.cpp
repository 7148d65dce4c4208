// Copyright 2026 The WSL Authors
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

#include "wsl/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>

#include "wsl/error.hpp"

namespace wsl {

namespace {

void check_state_qubits(unsigned q) {
  if (q < 1 || q > kMaxQubits + 1) throw DomainError("state qubit count out of range");
}

// Multiplies amplitudes whose `mask` bits are all set by `factor_one`, and
// (when `factor_zero` != 1) those with the target bit clear but the control
// bits set by `factor_zero`.
void apply_diagonal(std::span<Amplitude> amps, std::size_t control_mask, std::size_t target_bit,
                    Amplitude factor_zero, Amplitude factor_one) {
  const bool touch_zero = factor_zero != Amplitude(1.0, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & control_mask) != control_mask) continue;
    if (i & target_bit) {
      amps[i] *= factor_one;
    } else if (touch_zero) {
      amps[i] *= factor_zero;
    }
  }
}

}  // namespace

Statevector::Statevector(unsigned num_qubits) : num_qubits_(num_qubits) {
  check_state_qubits(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(unsigned num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_state_qubits(num_qubits);
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw DomainError("amplitude count does not match qubit count");
  }
}

Statevector Statevector::basis(unsigned num_qubits, Index index) {
  Statevector s(num_qubits);
  if (index >= s.size()) throw DomainError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double Statevector::norm_squared() const {
  double sum = 0.0;
  for (const Amplitude &a : amplitudes_) sum += std::norm(a);
  return sum;
}

void apply_gate_in_place(Statevector &state, const Gate &gate) {
  gate.validate(state.num_qubits());
  auto amps = state.amplitudes();
  const std::size_t target = std::size_t{1} << gate.targets.front();
  std::size_t control_mask = 0;
  for (Qubit c : gate.controls) control_mask |= std::size_t{1} << c;

  switch (gate.kind) {
    case GateKind::hadamard: {
      const double r = std::numbers::sqrt2 / 2.0;
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & target) continue;
        const Amplitude a = amps[i];
        const Amplitude b = amps[i | target];
        amps[i] = r * (a + b);
        amps[i | target] = r * (a - b);
      }
      break;
    }
    case GateKind::cnot:
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & target) || (i & control_mask) != control_mask) continue;
        std::swap(amps[i], amps[i | target]);
      }
      break;
    case GateKind::rotation_z:
    case GateKind::controlled_rotation_z:
      apply_diagonal(amps, control_mask, target, std::polar(1.0, -gate.angle / 2.0),
                     std::polar(1.0, gate.angle / 2.0));
      break;
    case GateKind::phase:
    case GateKind::controlled_phase:
      apply_diagonal(amps, control_mask, target, 1.0, std::polar(1.0, gate.angle));
      break;
  }
}

Statevector apply_gate(Statevector state, const Gate &gate) {
  apply_gate_in_place(state, gate);
  return state;
}

Statevector run(const Circuit &circuit) { return run(circuit, Statevector(circuit.num_qubits())); }

Statevector run(const Circuit &circuit, Statevector initial) {
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw DomainError("initial state has " + std::to_string(initial.num_qubits()) +
                      " qubits, circuit needs " + std::to_string(circuit.num_qubits()));
  }
  for (const Gate &g : circuit.gates()) apply_gate_in_place(initial, g);
  return initial;
}

double ancilla_one_probability(const Statevector &state) {
  if (state.num_qubits() < 2) throw DomainError("post-selection needs a register and an ancilla");
  const auto amps = state.amplitudes();
  const std::size_t half = amps.size() / 2;
  double p = 0.0;
  for (std::size_t i = half; i < amps.size(); ++i) p += std::norm(amps[i]);
  return p;
}

PostSelectionResult postselect_ancilla_one(const Statevector &state) {
  const double p = ancilla_one_probability(state);
  if (p < 1e-300) {
    throw DegenerateBranchError("ancilla=|1> branch has zero weight; success is impossible");
  }
  const auto amps = state.amplitudes();
  const std::size_t half = amps.size() / 2;
  const double scale = 1.0 / std::sqrt(p);
  std::vector<Amplitude> branch(half);
  for (std::size_t i = 0; i < half; ++i) branch[i] = amps[half + i] * scale;
  return {Statevector(state.num_qubits() - 1, std::move(branch)), p};
}

double infidelity(const Statevector &prepared, const SampledFunction &target) {
  if (prepared.size() != target.size()) {
    throw DomainError("prepared state and target differ in dimension");
  }
  const double target_norm = target.norm();
  if (target_norm == 0.0) throw DomainError("target function is all zero");
  Amplitude overlap{};
  for (std::size_t k = 0; k < target.size(); ++k) {
    overlap += std::conj(prepared[k]) * target[k];
  }
  overlap /= target_norm;
  return std::clamp(1.0 - std::norm(overlap), 0.0, 1.0);
}

DenseMatrix unitary_of(const Circuit &circuit) {
  if (circuit.num_qubits() > kMaxUnitaryQubits) {
    throw ResourceError("unitary extraction limited to " + std::to_string(kMaxUnitaryQubits) +
                        " qubits");
  }
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  DenseMatrix u{dim, std::vector<Amplitude>(dim * dim)};
  for (std::size_t col = 0; col < dim; ++col) {
    const Statevector out = run(circuit, Statevector::basis(circuit.num_qubits(), col));
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = out[row];
  }
  return u;
}

std::uint64_t sample_ancilla(const Statevector &state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw DomainError("shots must be at least 1");
  const double p = std::clamp(ancilla_one_probability(state), 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution draw(p);
  std::uint64_t successes = 0;
  for (std::uint64_t s = 0; s < shots; ++s) successes += draw(rng) ? 1 : 0;
  return successes;
}

}  // namespace wsl
