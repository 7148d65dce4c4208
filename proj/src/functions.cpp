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

#include "wsl/functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "wsl/error.hpp"

namespace wsl {

namespace {

constexpr std::array kAll{FunctionId::gaussian,   FunctionId::bimodal_gaussian,
                          FunctionId::lorentzian, FunctionId::sinc,
                          FunctionId::sqrt_abs,   FunctionId::ghz};

double gaussian(double x, double mu, double sigma) {
  const double d = (x - mu) / sigma;
  return std::exp(-0.5 * d * d) / sigma;
}

}  // namespace

std::string_view to_string(FunctionId id) {
  switch (id) {
    case FunctionId::gaussian: return "gaussian";
    case FunctionId::bimodal_gaussian: return "bimodal_gaussian";
    case FunctionId::lorentzian: return "lorentzian";
    case FunctionId::sinc: return "sinc";
    case FunctionId::sqrt_abs: return "sqrt_abs";
    case FunctionId::ghz: return "ghz";
  }
  return "unknown";
}

FunctionId parse_function_id(std::string_view name) {
  for (FunctionId id : kAll) {
    if (to_string(id) == name) return id;
  }
  throw DomainError("unknown function id '" + std::string(name) + "'");
}

std::span<const FunctionId> all_functions() { return kAll; }

std::span<const FunctionId> continuous_functions() {
  return std::span<const FunctionId>(kAll).first(kAll.size() - 1);
}

FunctionSpec::FunctionSpec(FunctionId id) : id_(id) {
  switch (id) {
    case FunctionId::gaussian:
      parameters_ = {{"mu", 0.5}, {"sigma", 1.0}};
      break;
    case FunctionId::bimodal_gaussian:
      parameters_ = {{"mu1", 0.25}, {"mu2", 0.75}, {"sigma1", 0.3}, {"sigma2", 0.04}, {"s", 0.1}};
      break;
    case FunctionId::lorentzian:
      parameters_ = {{"gamma", 1.0}, {"mu", 0.5}};
      break;
    case FunctionId::sinc:
      parameters_ = {{"frequency", 6.0 * std::numbers::pi}};
      break;
    case FunctionId::sqrt_abs:
      parameters_ = {{"center", 0.5}};
      break;
    case FunctionId::ghz:
      break;
  }
}

double FunctionSpec::parameter(const std::string &name) const {
  auto it = parameters_.find(name);
  if (it == parameters_.end()) {
    throw DomainError("function '" + std::string(to_string(id_)) + "' has no parameter '" +
                      name + "'");
  }
  return it->second;
}

FunctionSpec &FunctionSpec::set(const std::string &name, double value) {
  auto it = parameters_.find(name);
  if (it == parameters_.end()) {
    throw DomainError("function '" + std::string(to_string(id_)) + "' has no parameter '" +
                      name + "'");
  }
  if (!std::isfinite(value)) throw DomainError("parameter '" + name + "' must be finite");
  it->second = value;
  return *this;
}

double FunctionSpec::evaluate(double x) const {
  switch (id_) {
    case FunctionId::gaussian:
      return gaussian(x, parameter("mu"), parameter("sigma"));
    case FunctionId::bimodal_gaussian: {
      const double s = parameter("s");
      return s * gaussian(x, parameter("mu1"), parameter("sigma1")) +
             (1.0 - s) * gaussian(x, parameter("mu2"), parameter("sigma2"));
    }
    case FunctionId::lorentzian: {
      const double g = parameter("gamma");
      const double d = x - parameter("mu");
      return g / (g * g + 4.0 * d * d);
    }
    case FunctionId::sinc: {
      const double y = parameter("frequency") * x;
      return y == 0.0 ? 1.0 : std::sin(y) / y;
    }
    case FunctionId::sqrt_abs:
      return std::sqrt(std::abs(x - parameter("center")));
    case FunctionId::ghz:
      break;
  }
  throw DomainError("ghz has no continuous form");
}

SampledFunction discretize(const FunctionSpec &spec, unsigned n) {
  if (n < 1 || n > kMaxQubits) throw DomainError("qubit count out of range");
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> values(size, 0.0);
  if (spec.id() == FunctionId::ghz) {
    values.front() = std::numbers::sqrt2 / 2.0;
    values.back() = std::numbers::sqrt2 / 2.0;
  } else {
    for (std::size_t k = 0; k < size; ++k) {
      values[k] = spec.evaluate(static_cast<double>(k) / static_cast<double>(size));
    }
  }
  return SampledFunction(n, std::move(values), std::string(to_string(spec.id())));
}

}  // namespace wsl
