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

#include "wsl/walsh.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <utility>

#include "wsl/error.hpp"

namespace wsl {

namespace {

void check_qubits(unsigned n) {
  if (n < 1 || n > kMaxQubits) {
    throw DomainError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                      std::to_string(n));
  }
}

// In-place unnormalized Walsh-Hadamard transform in natural (Hadamard) order:
// out[x] = sum_y (-1)^popcount(x & y) in[y].
void fwht(std::vector<double> &data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double a = data[i];
        const double b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

std::size_t checked_terms(const SampledFunction &f, std::size_t num_terms) {
  if (!is_power_of_two(num_terms)) {
    throw DomainError("Walsh term count must be a power of two, got " +
                      std::to_string(num_terms));
  }
  return std::min(num_terms, f.size());
}

}  // namespace

Index reverse_bits(Index x, unsigned bits) {
  Index out = 0;
  for (unsigned i = 0; i < bits; ++i) {
    out = (out << 1) | ((x >> i) & 1U);
  }
  return out;
}

SampledFunction::SampledFunction(unsigned num_qubits, std::vector<double> values,
                                 std::string label)
    : num_qubits_(num_qubits), values_(std::move(values)), label_(std::move(label)) {
  check_qubits(num_qubits_);
  if (values_.size() != (std::size_t{1} << num_qubits_)) {
    throw DomainError("expected 2^" + std::to_string(num_qubits_) + " samples, got " +
                      std::to_string(values_.size()));
  }
  bool any_nonzero = false;
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("samples must be finite");
    any_nonzero = any_nonzero || v != 0.0;
  }
  if (!any_nonzero) throw DomainError("all-zero function cannot be amplitude encoded");
}

double SampledFunction::norm() const {
  return std::sqrt(std::inner_product(values_.begin(), values_.end(), values_.begin(), 0.0));
}

WalshSpectrum::WalshSpectrum(unsigned num_qubits, std::vector<double> coefficients,
                             std::optional<double> eps1, bool clamped)
    : num_qubits_(num_qubits),
      coefficients_(std::move(coefficients)),
      eps1_(eps1),
      clamped_(clamped) {
  check_qubits(num_qubits_);
  if (!is_power_of_two(coefficients_.size()) ||
      coefficients_.size() > (std::size_t{1} << num_qubits_)) {
    throw DomainError("spectrum size must be a power of two no larger than 2^n");
  }
}

int walsh_function(Index h, Index k, unsigned n) {
  check_qubits(n);
  const Index limit = Index{1} << n;
  if (h >= limit || k >= limit) {
    throw DomainError("Walsh order/point out of range for " + std::to_string(n) + " qubits");
  }
  return (std::popcount(h & reverse_bits(k, n)) & 1) ? -1 : 1;
}

std::size_t truncation_order(double eps1, unsigned n) {
  check_qubits(n);
  if (!(eps1 > 0.0 && eps1 < 1.0)) {
    throw DomainError("eps1 must lie in (0, 1)");
  }
  // Exact powers of two must not round up an extra bit.
  const double exponent = std::ceil(std::log2(1.0 / eps1) - 1e-12);
  const auto m = static_cast<unsigned>(std::max(exponent, 0.0));
  return std::size_t{1} << std::min(m, n);
}

WalshSpectrum walsh_transform(const SampledFunction &f, std::size_t num_terms) {
  const bool clamped = num_terms > f.size();
  const std::size_t terms = checked_terms(f, num_terms);
  const std::size_t stride = f.size() / terms;
  const unsigned n = f.num_qubits();

  std::vector<double> coefficients(terms, 0.0);
  for (std::size_t h = 0; h < terms; ++h) {
    double sum = 0.0;
    for (std::size_t j = 0; j < terms; ++j) {
      const Index k = j * stride;
      sum += walsh_function(h, k, n) * f[k];
    }
    coefficients[h] = sum / static_cast<double>(terms);
  }
  return WalshSpectrum(n, std::move(coefficients), std::nullopt, clamped);
}

WalshSpectrum walsh_transform_fast(const SampledFunction &f, std::size_t num_terms) {
  const bool clamped = num_terms > f.size();
  const std::size_t terms = checked_terms(f, num_terms);
  const std::size_t stride = f.size() / terms;
  const auto m = static_cast<unsigned>(std::countr_zero(terms));

  // On the coarse grid, w_h(j * stride) over n bits equals the m-bit
  // character (-1)^popcount(h & bitrev_m(j)), so permute then butterfly.
  std::vector<double> data(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    data[reverse_bits(j, m)] = f[j * stride];
  }
  fwht(data);
  const double scale = 1.0 / static_cast<double>(terms);
  for (double &v : data) v *= scale;
  return WalshSpectrum(f.num_qubits(), std::move(data), std::nullopt, clamped);
}

WalshSpectrum walsh_spectrum_for_error(const SampledFunction &f, double eps1) {
  const std::size_t terms = truncation_order(eps1, f.num_qubits());
  const bool clamped =
      std::ceil(std::log2(1.0 / eps1) - 1e-12) > static_cast<double>(f.num_qubits());
  auto spectrum = walsh_transform_fast(f, terms);
  return WalshSpectrum(f.num_qubits(),
                       {spectrum.coefficients().begin(), spectrum.coefficients().end()}, eps1,
                       clamped);
}

double series_eval(const WalshSpectrum &spectrum, Index k) {
  const unsigned n = spectrum.num_qubits();
  if (k >= (Index{1} << n)) {
    throw DomainError("series point out of range");
  }
  double sum = 0.0;
  for (std::size_t h = 0; h < spectrum.num_terms(); ++h) {
    sum += spectrum[h] * walsh_function(h, k, n);
  }
  return sum;
}

std::vector<double> series_values(const WalshSpectrum &spectrum) {
  const unsigned n = spectrum.num_qubits();
  const std::size_t terms = spectrum.num_terms();
  const auto m = static_cast<unsigned>(std::countr_zero(terms));

  std::vector<double> data(spectrum.coefficients().begin(), spectrum.coefficients().end());
  fwht(data);

  // A truncated series is constant on blocks of N/M consecutive points.
  std::vector<double> values(std::size_t{1} << n);
  const unsigned shift = n - m;
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = data[reverse_bits(k >> shift, m)];
  }
  return values;
}

}  // namespace wsl
