// Copyright 2026 The autotherm Authors
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

namespace autotherm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown or duplicate subsystem labels, mismatched layouts.
class LayoutError : public Error {
 public:
  using Error::Error;
};

/// Argument outside its admissible range (p < 1, beta <= 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A checked precondition on operator structure failed (hermiticity,
/// unitarity, density-matrix validity).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Scenario file is malformed or describes an inadmissible experiment.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double partial_value, double error_estimate)
      : Error(what), partial_value_(partial_value), error_estimate_(error_estimate) {}

  [[nodiscard]] double partial_value() const noexcept { return partial_value_; }
  [[nodiscard]] double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

}  // namespace autotherm
