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

#include <stdexcept>
#include <string>

namespace wsl {

/// Invalid argument or violated precondition (bad index, non power of two,
/// unknown function id, ...). The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File system failure. Message carries the offending path. CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request would exceed a hard size guard (dense unitary extraction).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Post-selection onto a branch with (numerically) zero weight.
class DegenerateBranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsl
