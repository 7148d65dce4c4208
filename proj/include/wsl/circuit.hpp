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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsl/walsh.hpp"

namespace wsl {

using Qubit = unsigned;

enum class GateKind {
  hadamard,
  rotation_z,             // diag(e^{-i a/2}, e^{+i a/2})
  phase,                  // diag(1, e^{i a})
  cnot,
  controlled_rotation_z,  // rotation_z on target when the control is |1>, phase exact
  controlled_phase,
};

std::string_view to_string(GateKind kind);

/// Number of control qubits a kind takes (0 or 1).
std::size_t control_count(GateKind kind);
bool has_angle(GateKind kind);

struct Gate {
  GateKind kind;
  double angle = 0.0;
  std::vector<Qubit> controls;
  std::vector<Qubit> targets;

  static Gate hadamard(Qubit target);
  static Gate rotation_z(double angle, Qubit target);
  static Gate phase(double angle, Qubit target);
  static Gate cnot(Qubit control, Qubit target);
  static Gate controlled_rotation_z(double angle, Qubit control, Qubit target);
  static Gate controlled_phase(double angle, Qubit control, Qubit target);

  /// Throws DomainError unless arity, distinctness and angle finiteness hold
  /// and every qubit is below `num_qubits`.
  void validate(unsigned num_qubits) const;

  friend bool operator==(const Gate &, const Gate &) = default;
};

enum class WslMode { correct, incomplete };

std::string_view to_string(WslMode mode);
WslMode parse_mode(std::string_view name);

/**
 * Ordered gate list over `register_qubits` qubits, plus an optional ancilla
 * which is always qubit index `register_qubits`.
 *
 * Register qubit j carries bit j of the basis index, so qubit n-1 is the most
 * significant one.
 */
class Circuit {
 public:
  Circuit(unsigned register_qubits, bool has_ancilla, std::optional<WslMode> mode = std::nullopt);

  unsigned register_qubits() const { return register_qubits_; }
  bool has_ancilla() const { return has_ancilla_; }
  unsigned num_qubits() const { return register_qubits_ + (has_ancilla_ ? 1U : 0U); }
  Qubit ancilla() const;
  std::optional<WslMode> mode() const { return mode_; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  void append(Gate gate);
  void append(std::span<const Gate> gates);

  /// Copy holding only the first `count` gates.
  Circuit prefix(std::size_t count) const;

  friend bool operator==(const Circuit &, const Circuit &) = default;

 private:
  unsigned register_qubits_;
  bool has_ancilla_;
  std::optional<WslMode> mode_;
  std::vector<Gate> gates_;
};

/// Register qubit that receives the Z rotation for order h: the most
/// significant qubit on which the Walsh operator acts, n-1-ctz(h).
Qubit pivot_qubit(Index h, unsigned n);

/**
 * CNOT staircase A_h: one CNOT per set bit h_i other than the pivot's bit,
 * control on qubit n-1-i, target on the pivot. Empty for single-bit orders.
 */
std::vector<Gate> staircase(Index h, unsigned n);

/// A_h . Rz(2 theta on pivot) . A_h^-1, whose unitary is exactly exp(-i theta w_h).
std::vector<Gate> walsh_term(Index h, double theta, unsigned n);

/// Walsh term with only the central rotation controlled by qubit `control`
/// (default: the ancilla at index n). The staircases cancel on the
/// control-0 branch.
std::vector<Gate> controlled_walsh_term(Index h, double theta, unsigned n,
                                        std::optional<Qubit> control = std::nullopt);

struct WslBuildOptions {
  /// Elide controlled terms whose coefficient is exactly zero.
  bool skip_zero_terms = false;
};

/**
 * Repeat-until-success loader circuit:
 *   H on ancilla, H on every register qubit,
 *   controlled W_h(eps0 a_h) for h = 1 .. M-1,
 *   P(-eps0 a_0) on the ancilla (correct mode only),
 *   H on ancilla, P(-pi/2) on ancilla.
 * The register is prepared when the ancilla reads |1>.
 */
Circuit build_wsl_circuit(const WalshSpectrum &spectrum, double eps0, unsigned n, WslMode mode,
                          WslBuildOptions options = {});

/// Gate count of build_wsl_circuit without zero skipping.
std::size_t wsl_gate_count(unsigned n, std::size_t num_terms, WslMode mode);

/// Line-based text form, see docs/circuit_format.md.
std::string to_text(const Circuit &circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace wsl
