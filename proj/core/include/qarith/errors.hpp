// Copyright 2026 The qarith Authors
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

namespace qarith {

/// Structural misuse of the circuit IR (overlapping registers, operand clash, ...).
class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the domain of a builder or formula ("empty adder", "formula domain").
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure raised while executing a circuit on one of the engines.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The sparse engine exceeded its configured support cap. Never swallowed by
/// verification: a run that cannot be completed is not a failing case.
class SupportCapError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qarith
