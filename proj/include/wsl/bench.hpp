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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsl/circuit.hpp"
#include "wsl/functions.hpp"
#include "wsl/walsh.hpp"

namespace wsl {

/// Infidelities below this are reported as the floor with float_floor set.
inline constexpr double kInfidelityFloor = 1e-15;

struct ExperimentRecord {
  std::string function;
  unsigned n = 0;
  double eps0 = 0.0;
  double eps1 = 0.0;
  std::size_t num_terms = 0;
  WslMode mode = WslMode::correct;
  double infidelity = 1.0;
  double success_probability = 0.0;
  double wall_time_ms = 0.0;
  bool float_floor = false;
};

SampledFunction catalog(const FunctionSpec &spec, unsigned n);

/// catalog -> truncation -> fast transform -> circuit -> statevector run ->
/// post-selection -> infidelity against the normalized samples.
ExperimentRecord run_experiment(const FunctionSpec &spec, unsigned n, double eps0, double eps1,
                                WslMode mode);

std::vector<unsigned> default_qubit_grid();   // 7..13
std::vector<double> default_epsilon_grid();   // 2^-3 .. 2^-10
std::vector<FunctionSpec> default_function_suite();

/// `threads` = 0 picks the hardware concurrency. Output order is
/// (function, mode, n) regardless of thread count.
std::vector<ExperimentRecord> sweep_qubits(std::span<const FunctionSpec> specs,
                                           std::span<const unsigned> qubit_counts, double eps,
                                           std::span<const WslMode> modes,
                                           unsigned threads = 0);

/// Runs eps0 = eps1 = eps for every grid entry. Output order (function, mode, eps).
std::vector<ExperimentRecord> sweep_epsilon(std::span<const FunctionSpec> specs, unsigned n,
                                            std::span<const double> eps_grid,
                                            std::span<const WslMode> modes,
                                            unsigned threads = 0);

/// Sorts by (function, mode, n, eps0).
void sort_records(std::vector<ExperimentRecord> &records);

inline constexpr std::string_view kCsvHeader =
    "function,n,eps0,eps1,M,mode,infidelity,success_probability,wall_time_ms,float_floor";

/// Header plus one sorted row per record. `mask_timing` writes 0 for the
/// wall-clock column so that output is reproducible byte for byte.
std::string to_csv(std::vector<ExperimentRecord> records, bool mask_timing = false);

/// Writes to_csv(...) to `path`; throws IoError naming the path on failure.
void emit_csv(const std::vector<ExperimentRecord> &records, const std::filesystem::path &path,
              bool mask_timing = false);

/// "7..13", "7,9,11" or a single value.
std::vector<unsigned> parse_qubit_list(std::string_view text);

/// "2^-3..2^-10" (every power of two in between), or a comma list of
/// decimals and 2^-k terms.
std::vector<double> parse_epsilon_list(std::string_view text);

}  // namespace wsl
