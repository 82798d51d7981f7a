// Copyright 2026 The qzeno Authors
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

namespace qzeno {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag, `what()` begins with the name of the originating operation.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& message)
      : Error("DimensionMismatch", message) {}
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(const std::string& message)
      : Error("NotNormalized", message) {}
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(const std::string& message)
      : Error("NotHermitian", message) {}
};

class AncillaNotOrthogonal : public Error {
 public:
  explicit AncillaNotOrthogonal(const std::string& message)
      : Error("AncillaNotOrthogonal", message) {}
};

class NonPositiveDuration : public Error {
 public:
  explicit NonPositiveDuration(const std::string& message)
      : Error("NonPositiveDuration", message) {}
};

class EmptyChain : public Error {
 public:
  explicit EmptyChain(const std::string& message)
      : Error("EmptyChain", message) {}
};

class ConfigInvalid : public Error {
 public:
  explicit ConfigInvalid(const std::string& message)
      : Error("ConfigInvalid", message) {}
};

/// Any other violated construction invariant (non-unitary matrix claimed
/// unitary, non-idempotent projector, trace != 1 density matrix, ...).
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message)
      : Error("InvariantViolation", message) {}
};

}  // namespace qzeno
