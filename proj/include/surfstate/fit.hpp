// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfstate/errors.hpp"

// Recovery of (E0, delta) from observed level energies or transition
// frequencies by damped Gauss-Newton on E(n) = -E0/(n - delta)^2 with the
// analytic Jacobian.

namespace surfstate::fit {

enum class EntryKind : std::uint8_t { level_energy, transition_from_ground };

struct LevelEntry {
  int n;             // >= 1
  double value_ghz;  // level energy (negative) or transition from n = 1
  EntryKind kind;
  double weight = 1.0;
};

struct LevelDataset {
  std::vector<LevelEntry> entries;

  // Enforces: n distinct per kind, at least 3 entries, positive weights.
  // Throws ConfigError with a description of the offending entry.
  void validate() const;
};

// Strict CSV with header "n,value_ghz,kind[,weight]"; parse failures carry
// line and column numbers.  kind is "level_energy" or
// "transition_from_ground".
LevelDataset parse_dataset_csv(std::istream& in);
LevelDataset load_dataset_csv(const std::string& path);

struct FitResult {
  double e0_ghz;
  double delta;
  double rms_residual_ghz;
  std::array<double, 4> covariance_proxy;  // row-major 2x2, (e0, delta) order
  int iterations;
};

// Model value for one entry at parameters (e0, delta).
double model_value_ghz(const LevelEntry& entry, double e0_ghz, double delta);

// Levenberg-damped Gauss-Newton.  delta is kept inside (0,1) by step
// backtracking.  Default init: E0 from the most strongly bound entry,
// delta = 0.02.  Throws ConvergenceError after 200 iterations and
// DomainError if backtracking cannot keep delta in (0,1).
FitResult fit_levels(const LevelDataset& data,
                     std::optional<std::pair<double, double>> init = {});

// Worst relative deviation between the analytic Jacobian and central finite
// differences at the given parameters.
double jacobian_check(const LevelDataset& data, double e0_ghz, double delta);

}  // namespace surfstate::fit
