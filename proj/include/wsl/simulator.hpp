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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wsl/circuit.hpp"
#include "wsl/walsh.hpp"

namespace wsl {

using Amplitude = std::complex<double>;

/// Dense state over `num_qubits` qubits; amplitude index bit q is qubit q.
class Statevector {
 public:
  /// |0...0>.
  explicit Statevector(unsigned num_qubits);
  Statevector(unsigned num_qubits, std::vector<Amplitude> amplitudes);

  static Statevector basis(unsigned num_qubits, Index index);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }
  const Amplitude &operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  unsigned num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

struct PostSelectionResult {
  Statevector register_state;
  double success_probability;
};

/// Row-major dense complex matrix, for oracle comparisons on small circuits.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Amplitude> data;

  Amplitude &operator()(std::size_t row, std::size_t col) { return data[row * dim + col]; }
  const Amplitude &operator()(std::size_t row, std::size_t col) const {
    return data[row * dim + col];
  }
};

/// Largest total qubit count unitary_of will expand.
inline constexpr unsigned kMaxUnitaryQubits = 12;

/// In-place gate application on a state buffer.
void apply_gate_in_place(Statevector &state, const Gate &gate);

Statevector apply_gate(Statevector state, const Gate &gate);

/// Applies the gates left to right starting from |0...0>, or from `initial`.
Statevector run(const Circuit &circuit);
Statevector run(const Circuit &circuit, Statevector initial);

/**
 * Keeps the branch where the highest-index qubit (the ancilla) is |1>.
 * The probability of that branch is reported alongside the renormalized
 * register state. Throws DegenerateBranchError when it is below 1e-300.
 */
PostSelectionResult postselect_ancilla_one(const Statevector &state);

/// Weight of the ancilla=|1> branch without building the register state.
double ancilla_one_probability(const Statevector &state);

/// 1 - |<prepared|f>|^2 with f normalized, clamped to [0, 1].
double infidelity(const Statevector &prepared, const SampledFunction &target);

/// Columns are run(circuit, |k>). Throws ResourceError above kMaxUnitaryQubits.
DenseMatrix unitary_of(const Circuit &circuit);

/// Number of ancilla=|1> outcomes in `shots` seeded Bernoulli draws.
std::uint64_t sample_ancilla(const Statevector &state, std::uint64_t shots, std::uint64_t seed);

}  // namespace wsl
