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

#include "wsl/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wsl/error.hpp"
#include "wsl/format.hpp"

namespace wsl {

namespace {

constexpr std::string_view kHeader = "WSLCIRCUIT";

void check_order(Index h, unsigned n) {
  if (n < 1 || n > kMaxQubits) throw DomainError("qubit count out of range");
  if (h == 0) {
    throw DomainError("Walsh order 0 is a global phase; use the ancilla phase gate instead");
  }
  if (h >= (Index{1} << n)) throw DomainError("Walsh order out of range");
}

GateKind parse_kind(std::string_view token) {
  for (GateKind kind : {GateKind::hadamard, GateKind::rotation_z, GateKind::phase, GateKind::cnot,
                        GateKind::controlled_rotation_z, GateKind::controlled_phase}) {
    if (to_string(kind) == token) return kind;
  }
  throw DomainError("unknown gate kind '" + std::string(token) + "'");
}

Qubit parse_qubit(std::string_view token) {
  const long long value = parse_integer(token);
  if (value < 0 || value > static_cast<long long>(kMaxQubits)) {
    throw DomainError("qubit index out of range: " + std::string(token));
  }
  return static_cast<Qubit>(value);
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::hadamard: return "H";
    case GateKind::rotation_z: return "RZ";
    case GateKind::phase: return "P";
    case GateKind::cnot: return "CNOT";
    case GateKind::controlled_rotation_z: return "CRZ";
    case GateKind::controlled_phase: return "CP";
  }
  return "?";
}

std::size_t control_count(GateKind kind) {
  switch (kind) {
    case GateKind::cnot:
    case GateKind::controlled_rotation_z:
    case GateKind::controlled_phase:
      return 1;
    default:
      return 0;
  }
}

bool has_angle(GateKind kind) {
  return kind != GateKind::hadamard && kind != GateKind::cnot;
}

Gate Gate::hadamard(Qubit target) { return {GateKind::hadamard, 0.0, {}, {target}}; }
Gate Gate::rotation_z(double angle, Qubit target) {
  return {GateKind::rotation_z, angle, {}, {target}};
}
Gate Gate::phase(double angle, Qubit target) { return {GateKind::phase, angle, {}, {target}}; }
Gate Gate::cnot(Qubit control, Qubit target) { return {GateKind::cnot, 0.0, {control}, {target}}; }
Gate Gate::controlled_rotation_z(double angle, Qubit control, Qubit target) {
  return {GateKind::controlled_rotation_z, angle, {control}, {target}};
}
Gate Gate::controlled_phase(double angle, Qubit control, Qubit target) {
  return {GateKind::controlled_phase, angle, {control}, {target}};
}

void Gate::validate(unsigned num_qubits) const {
  if (targets.size() != 1 || controls.size() != control_count(kind)) {
    throw DomainError("gate " + std::string(to_string(kind)) + " has wrong arity");
  }
  if (!std::isfinite(angle)) throw DomainError("gate angle must be finite");
  if (!has_angle(kind) && angle != 0.0) {
    throw DomainError("gate " + std::string(to_string(kind)) + " takes no angle");
  }
  for (Qubit q : controls) {
    if (q >= num_qubits) throw DomainError("control qubit out of range");
    if (q == targets.front()) throw DomainError("control and target must differ");
  }
  if (targets.front() >= num_qubits) throw DomainError("target qubit out of range");
}

std::string_view to_string(WslMode mode) {
  return mode == WslMode::correct ? "correct" : "incomplete";
}

WslMode parse_mode(std::string_view name) {
  if (name == "correct") return WslMode::correct;
  if (name == "incomplete") return WslMode::incomplete;
  throw DomainError("unknown mode '" + std::string(name) + "'");
}

Circuit::Circuit(unsigned register_qubits, bool has_ancilla, std::optional<WslMode> mode)
    : register_qubits_(register_qubits), has_ancilla_(has_ancilla), mode_(mode) {
  if (num_qubits() == 0 || num_qubits() > kMaxQubits + 1) {
    throw DomainError("circuit qubit count out of range");
  }
}

Qubit Circuit::ancilla() const {
  if (!has_ancilla_) throw DomainError("circuit has no ancilla");
  return register_qubits_;
}

void Circuit::append(Gate gate) {
  gate.validate(num_qubits());
  gates_.push_back(std::move(gate));
}

void Circuit::append(std::span<const Gate> gates) {
  for (const Gate &g : gates) append(g);
}

Circuit Circuit::prefix(std::size_t count) const {
  Circuit out(register_qubits_, has_ancilla_, mode_);
  out.gates_.assign(gates_.begin(), gates_.begin() + std::min(count, gates_.size()));
  return out;
}

Qubit pivot_qubit(Index h, unsigned n) {
  check_order(h, n);
  return n - 1 - static_cast<Qubit>(std::countr_zero(h));
}

std::vector<Gate> staircase(Index h, unsigned n) {
  const Qubit pivot = pivot_qubit(h, n);
  std::vector<Gate> gates;
  // Bit i of h drives qubit n-1-i; the lowest set bit is the pivot itself.
  for (Index rest = h & (h - 1); rest != 0; rest &= rest - 1) {
    const auto bit = static_cast<unsigned>(std::countr_zero(rest));
    gates.push_back(Gate::cnot(n - 1 - bit, pivot));
  }
  return gates;
}

namespace {

std::vector<Gate> conjugate(const std::vector<Gate> &ladder, Gate centre) {
  std::vector<Gate> gates(ladder);
  gates.push_back(std::move(centre));
  gates.insert(gates.end(), ladder.rbegin(), ladder.rend());
  return gates;
}

}  // namespace

std::vector<Gate> walsh_term(Index h, double theta, unsigned n) {
  return conjugate(staircase(h, n), Gate::rotation_z(2.0 * theta, pivot_qubit(h, n)));
}

std::vector<Gate> controlled_walsh_term(Index h, double theta, unsigned n,
                                        std::optional<Qubit> control) {
  const Qubit ctrl = control.value_or(n);
  const Qubit pivot = pivot_qubit(h, n);
  if (ctrl < n && ((h >> (n - 1 - ctrl)) & 1U)) {
    throw DomainError("control qubit overlaps the Walsh operator support");
  }
  return conjugate(staircase(h, n), Gate::controlled_rotation_z(2.0 * theta, ctrl, pivot));
}

Circuit build_wsl_circuit(const WalshSpectrum &spectrum, double eps0, unsigned n, WslMode mode,
                          WslBuildOptions options) {
  if (spectrum.num_qubits() != n) {
    throw DomainError("spectrum is over " + std::to_string(spectrum.num_qubits()) +
                      " qubits, circuit requested over " + std::to_string(n));
  }
  if (!(eps0 > 0.0) || !std::isfinite(eps0)) throw DomainError("eps0 must be positive");

  Circuit circuit(n, true, mode);
  const Qubit ancilla = circuit.ancilla();
  circuit.append(Gate::hadamard(ancilla));
  for (Qubit q = 0; q < n; ++q) circuit.append(Gate::hadamard(q));

  for (Index h = 1; h < spectrum.num_terms(); ++h) {
    if (options.skip_zero_terms && spectrum[h] == 0.0) continue;
    circuit.append(controlled_walsh_term(h, eps0 * spectrum[h], n, ancilla));
  }

  if (mode == WslMode::correct) {
    circuit.append(Gate::phase(-eps0 * spectrum[0], ancilla));
  }
  circuit.append(Gate::hadamard(ancilla));
  circuit.append(Gate::phase(-std::numbers::pi / 2.0, ancilla));
  return circuit;
}

std::size_t wsl_gate_count(unsigned n, std::size_t num_terms, WslMode mode) {
  std::size_t count = n + 1;
  for (Index h = 1; h < num_terms; ++h) {
    count += 2 * (static_cast<std::size_t>(std::popcount(h)) - 1) + 1;
  }
  return count + (mode == WslMode::correct ? 3 : 2);
}

std::string to_text(const Circuit &circuit) {
  std::ostringstream out;
  out << kHeader << ' ' << circuit.register_qubits() << ' ' << (circuit.has_ancilla() ? 1 : 0)
      << ' ' << (circuit.mode() ? to_string(*circuit.mode()) : std::string_view("none")) << '\n';
  for (const Gate &g : circuit.gates()) {
    out << to_string(g.kind);
    if (has_angle(g.kind)) out << ' ' << format_double(g.angle);
    for (Qubit q : g.controls) out << ' ' << q;
    out << " ;";
    for (Qubit q : g.targets) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    try {
      if (!circuit) {
        if (tokens.size() != 4 || tokens[0] != kHeader) throw DomainError("missing header");
        const long long qubits = parse_integer(tokens[1]);
        const long long ancilla = parse_integer(tokens[2]);
        if (qubits < 0 || (ancilla != 0 && ancilla != 1)) throw DomainError("bad header");
        std::optional<WslMode> mode;
        if (tokens[3] != "none") mode = parse_mode(tokens[3]);
        circuit.emplace(static_cast<unsigned>(qubits), ancilla == 1, mode);
        continue;
      }

      Gate gate{parse_kind(tokens[0]), 0.0, {}, {}};
      std::size_t pos = 1;
      if (has_angle(gate.kind)) {
        if (pos >= tokens.size()) throw DomainError("missing angle");
        gate.angle = parse_double(tokens[pos++]);
      }
      bool after_separator = false;
      for (; pos < tokens.size(); ++pos) {
        if (tokens[pos] == ";") {
          if (after_separator) throw DomainError("repeated ';'");
          after_separator = true;
          continue;
        }
        (after_separator ? gate.targets : gate.controls).push_back(parse_qubit(tokens[pos]));
      }
      if (!after_separator) throw DomainError("missing ';' between controls and targets");
      circuit->append(std::move(gate));
    } catch (const DomainError &e) {
      throw DomainError("circuit text line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!circuit) throw DomainError("circuit text is empty");
  return *std::move(circuit);
}

}  // namespace wsl
