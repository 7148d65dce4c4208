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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wsl {

using Index = std::uint64_t;

/// Largest register width accepted anywhere in the library.
inline constexpr unsigned kMaxQubits = 30;

constexpr bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

/// Reverses the low `bits` bits of `x`.
Index reverse_bits(Index x, unsigned bits);

/**
 * Real samples f(0), ..., f(N-1) of the function to load, N = 2^n.
 *
 * Values may be negative or change sign; the only requirement is that the
 * amplitude-encoded state exists, so an all-zero vector is rejected.
 */
class SampledFunction {
 public:
  SampledFunction(unsigned num_qubits, std::vector<double> values, std::string label = {});

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  const std::string &label() const { return label_; }

  double norm() const;

 private:
  unsigned num_qubits_;
  std::vector<double> values_;
  std::string label_;
};

/**
 * Leading M Walsh coefficients a_0, ..., a_{M-1} of a function on n qubits.
 *
 * `eps1` is set when M was derived from an error target, and `clamped` records
 * that the requested order exceeded 2^n and was cut back to the full series.
 */
class WalshSpectrum {
 public:
  WalshSpectrum(unsigned num_qubits, std::vector<double> coefficients,
                std::optional<double> eps1 = std::nullopt, bool clamped = false);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t num_terms() const { return coefficients_.size(); }
  std::span<const double> coefficients() const { return coefficients_; }
  double operator[](std::size_t h) const { return coefficients_[h]; }
  std::optional<double> eps1() const { return eps1_; }
  bool clamped() const { return clamped_; }

 private:
  unsigned num_qubits_;
  std::vector<double> coefficients_;
  std::optional<double> eps1_;
  bool clamped_;
};

/**
 * Walsh function w_h(k) on n bits: (-1)^(sum_j h_j * k_{n-1-j}).
 *
 * Bit j of the order pairs with bit n-1-j of the point, so w_h(k) is the k-th
 * diagonal entry of Z^{h_0} (x) Z^{h_1} (x) ... (x) Z^{h_{n-1}} with the most
 * significant qubit leftmost.
 */
int walsh_function(Index h, Index k, unsigned n);

/// M = 2^ceil(log2(1/eps1)), clamped to 2^n.
std::size_t truncation_order(double eps1, unsigned n);

/**
 * Direct O(M^2) Walsh transform over M points.
 *
 * The M points are the dyadic grid x_j = j/M, i.e. samples k = j * N/M of `f`.
 * For M = N this is every sample. Requests with M > N are clamped to N.
 */
WalshSpectrum walsh_transform(const SampledFunction &f, std::size_t num_terms);

/// Same result as walsh_transform via an in-place fast Walsh-Hadamard
/// butterfly, O(M log M).
WalshSpectrum walsh_transform_fast(const SampledFunction &f, std::size_t num_terms);

/// Fast transform truncated at truncation_order(eps1, n); the spectrum keeps
/// eps1 and the clamp flag.
WalshSpectrum walsh_spectrum_for_error(const SampledFunction &f, double eps1);

/// Truncated series f_M(k) = sum_{h<M} a_h w_h(k).
double series_eval(const WalshSpectrum &spectrum, Index k);

/// f_M(k) for every k in [0, 2^n), O(M log M + N).
std::vector<double> series_values(const WalshSpectrum &spectrum);

}  // namespace wsl
