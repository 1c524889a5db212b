// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "surfstate/oracle.hpp"
#include "surfstate/spectrum.hpp"

// Cross-validation battery: the analytic layer (spectrum + wavefunction,
// built on Whittaker functions) against the grid oracle (no special
// functions) plus the internal wavefunction consistency checks.  Used by the
// CLI `verify` subcommand and by the acceptance suite.

namespace surfstate::verify {

struct CheckResult {
  std::string name;
  bool pass;
  double measured;   // the quantity compared against the tolerance
  double tolerance;
  std::string detail;
};

struct OracleGridConfig {
  double l_over_x0 = 80.0;  // for n = 1; scaled as max(80, 30 n^2) above
  int n_points = 8000;
  int richardson_levels = 2;
};

struct BatteryOptions {
  OracleGridConfig grid;
  int n_levels_oracle = 3;       // analytic-vs-oracle comparison depth
  int n_levels_wavefunction = 5; // norm / nodes / continuity / jump depth
};

// Runs every check; never throws on a failed comparison (failures are
// reported in-band), only on configuration errors.
std::vector<CheckResult> run_battery(const spectrum::DefectParams& params,
                                     const model::MaterialScales& scales,
                                     const BatteryOptions& options = {});

// One line per check, stable formatting (no timestamps): "name PASS|FAIL
// measured=... tol=... detail".
std::string format_report(const std::vector<CheckResult>& results,
                          int digits = 17);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace surfstate::verify
