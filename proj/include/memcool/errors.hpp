// Copyright 2026 The memcool Authors
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
#include <stdexcept>

namespace memcool {

/// Thrown when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a requested simulation would exceed the dense-storage limits.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Absolute tolerance on normalization and majorization partial sums.
inline constexpr double kTolerance = 1e-12;

/// Largest joint S-L-R distribution the engine will allocate.
inline constexpr std::size_t kMaxJointSize = 10'000'000;

/// Largest dimension of a dense transition matrix.
inline constexpr std::size_t kMaxDenseDim = 4096;

}  // namespace memcool
