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

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "wsl/walsh.hpp"

namespace wsl {

enum class FunctionId { gaussian, bimodal_gaussian, lorentzian, sinc, sqrt_abs, ghz };

std::string_view to_string(FunctionId id);
FunctionId parse_function_id(std::string_view name);

/// Every catalog entry, in declaration order.
std::span<const FunctionId> all_functions();

/// The five continuous entries (everything but ghz).
std::span<const FunctionId> continuous_functions();

/**
 * A benchmark target: an id plus its named real parameters.
 *
 * Defaults:
 *   gaussian          mu=0.5 sigma=1
 *   bimodal_gaussian  mu1=0.25 mu2=0.75 sigma1=0.3 sigma2=0.04 s=0.1
 *   lorentzian        gamma=1 mu=0.5
 *   sinc              frequency=6*pi
 *   sqrt_abs          center=0.5
 *   ghz               (none)
 */
class FunctionSpec {
 public:
  explicit FunctionSpec(FunctionId id);

  FunctionId id() const { return id_; }
  const std::map<std::string, double> &parameters() const { return parameters_; }
  double parameter(const std::string &name) const;

  /// Overrides a known parameter; unknown names throw DomainError.
  FunctionSpec &set(const std::string &name, double value);

  /// Value of the continuous function at x in [0, 1). Throws for ghz.
  double evaluate(double x) const;

 private:
  FunctionId id_;
  std::map<std::string, double> parameters_;
};

/// Samples f(k/N) for k in [0, N). ghz is produced directly in discrete
/// form: 1/sqrt(2) at k=0 and k=N-1, zero elsewhere.
SampledFunction discretize(const FunctionSpec &spec, unsigned n);

}  // namespace wsl
