// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "surfstate/errors.hpp"

namespace surfstate::quadrature {

struct Result {
  double value;
  double abs_err;   // estimated
  long n_evals;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b].  Splits the interval with the
// largest local error until both tolerances are met.  Throws AccuracyError
// if max_intervals subdivisions cannot reach the tolerance.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol, int max_intervals = 2000);

}  // namespace surfstate::quadrature
