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

#include "wsl/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

#include "wsl/error.hpp"
#include "wsl/format.hpp"
#include "wsl/simulator.hpp"

namespace wsl {

namespace {

template <typename Job>
std::vector<ExperimentRecord> run_parallel(std::size_t count, unsigned threads, Job job) {
  std::vector<ExperimentRecord> records(count);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        records[i] = job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// "2^-7" -> -7; nullopt for anything else.
std::optional<int> power_of_two_exponent(std::string_view token) {
  if (token.size() < 3 || token.substr(0, 2) != "2^") return std::nullopt;
  return static_cast<int>(parse_integer(token.substr(2)));
}

double parse_epsilon(std::string_view token) {
  if (auto e = power_of_two_exponent(token)) return std::ldexp(1.0, *e);
  return parse_double(token);
}

}  // namespace

SampledFunction catalog(const FunctionSpec &spec, unsigned n) { return discretize(spec, n); }

ExperimentRecord run_experiment(const FunctionSpec &spec, unsigned n, double eps0, double eps1,
                                WslMode mode) {
  if (!(eps0 > 0.0 && eps0 < 1.0)) throw DomainError("eps0 must lie in (0, 1)");
  if (!(eps1 > 0.0 && eps1 < 1.0)) throw DomainError("eps1 must lie in (0, 1)");

  const auto start = std::chrono::steady_clock::now();
  const SampledFunction target = catalog(spec, n);
  const WalshSpectrum spectrum = walsh_spectrum_for_error(target, eps1);
  const Circuit circuit = build_wsl_circuit(spectrum, eps0, n, mode);
  const PostSelectionResult selected = postselect_ancilla_one(run(circuit));
  const double raw = infidelity(selected.register_state, target);
  const auto stop = std::chrono::steady_clock::now();

  ExperimentRecord record;
  record.function = std::string(to_string(spec.id()));
  record.n = n;
  record.eps0 = eps0;
  record.eps1 = eps1;
  record.num_terms = spectrum.num_terms();
  record.mode = mode;
  record.float_floor = raw < kInfidelityFloor;
  record.infidelity = record.float_floor ? kInfidelityFloor : raw;
  record.success_probability = std::clamp(selected.success_probability, 0.0, 1.0);
  record.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return record;
}

std::vector<unsigned> default_qubit_grid() { return {7, 8, 9, 10, 11, 12, 13}; }

std::vector<double> default_epsilon_grid() {
  std::vector<double> grid;
  for (int e = -3; e >= -10; --e) grid.push_back(std::ldexp(1.0, e));
  return grid;
}

std::vector<FunctionSpec> default_function_suite() {
  std::vector<FunctionSpec> suite;
  for (FunctionId id : all_functions()) suite.emplace_back(id);
  return suite;
}

std::vector<ExperimentRecord> sweep_qubits(std::span<const FunctionSpec> specs,
                                           std::span<const unsigned> qubit_counts, double eps,
                                           std::span<const WslMode> modes, unsigned threads) {
  const std::size_t per_spec = modes.size() * qubit_counts.size();
  return run_parallel(specs.size() * per_spec, threads, [&](std::size_t i) {
    const FunctionSpec &spec = specs[i / per_spec];
    const WslMode mode = modes[(i % per_spec) / qubit_counts.size()];
    const unsigned n = qubit_counts[i % qubit_counts.size()];
    return run_experiment(spec, n, eps, eps, mode);
  });
}

std::vector<ExperimentRecord> sweep_epsilon(std::span<const FunctionSpec> specs, unsigned n,
                                            std::span<const double> eps_grid,
                                            std::span<const WslMode> modes, unsigned threads) {
  const std::size_t per_spec = modes.size() * eps_grid.size();
  return run_parallel(specs.size() * per_spec, threads, [&](std::size_t i) {
    const FunctionSpec &spec = specs[i / per_spec];
    const WslMode mode = modes[(i % per_spec) / eps_grid.size()];
    const double eps = eps_grid[i % eps_grid.size()];
    return run_experiment(spec, n, eps, eps, mode);
  });
}

void sort_records(std::vector<ExperimentRecord> &records) {
  std::stable_sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
    return std::tuple(a.function, to_string(a.mode), a.n, a.eps0) <
           std::tuple(b.function, to_string(b.mode), b.n, b.eps0);
  });
}

std::string to_csv(std::vector<ExperimentRecord> records, bool mask_timing) {
  sort_records(records);
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const ExperimentRecord &r : records) {
    out << r.function << ',' << r.n << ',' << format_double(r.eps0) << ','
        << format_double(r.eps1) << ',' << r.num_terms << ',' << to_string(r.mode) << ','
        << format_double(r.infidelity) << ',' << format_double(r.success_probability) << ','
        << format_double(mask_timing ? 0.0 : r.wall_time_ms) << ','
        << (r.float_floor ? "true" : "false") << '\n';
  }
  return out.str();
}

void emit_csv(const std::vector<ExperimentRecord> &records, const std::filesystem::path &path,
              bool mask_timing) {
  const std::string body = to_csv(records, mask_timing);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << body;
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<unsigned> parse_qubit_list(std::string_view text) {
  std::vector<unsigned> out;
  auto to_qubits = [](std::string_view token) {
    const long long v = parse_integer(token);
    if (v < 1 || v > static_cast<long long>(kMaxQubits)) {
      throw DomainError("qubit count out of range: " + std::string(token));
    }
    return static_cast<unsigned>(v);
  };
  for (const std::string &part : split(text, ',')) {
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_qubits(part));
      continue;
    }
    const unsigned lo = to_qubits(std::string_view(part).substr(0, dots));
    const unsigned hi = to_qubits(std::string_view(part).substr(dots + 2));
    if (lo > hi) throw DomainError("empty qubit range '" + part + "'");
    for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

std::vector<double> parse_epsilon_list(std::string_view text) {
  std::vector<double> out;
  for (const std::string &part : split(text, ',')) {
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_epsilon(part));
    } else {
      const auto first = power_of_two_exponent(std::string_view(part).substr(0, dots));
      const auto last = power_of_two_exponent(std::string_view(part).substr(dots + 2));
      if (!first || !last) throw DomainError("ranges must be written 2^a..2^b: '" + part + "'");
      const int step = *first <= *last ? 1 : -1;
      for (int e = *first;; e += step) {
        out.push_back(std::ldexp(1.0, e));
        if (e == *last) break;
      }
    }
  }
  for (double eps : out) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("epsilon values must lie in (0, 1)");
  }
  return out;
}

}  // namespace wsl
