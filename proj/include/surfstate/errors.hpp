// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace surfstate {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation requested at a pole of a special function.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// No evaluation scheme reached the required accuracy at this point.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative solver exhausted its budget without converging.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid run configuration (grid sizes, file contents, CLI options).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds a documented implementation cap.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace surfstate
