// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "surfstate/model.hpp"

// Analytic eigenvalue layer.  The contact interaction of strength lambda at
// the interface selects the effective quantum numbers s = n - delta through
// cot(pi s) = -lambda/pi, with lambda = pi cot(pi delta), 0 < delta < 1.

namespace surfstate::spectrum {

// lambda and delta are always mutually consistent; construct from either.
class DefectParams {
 public:
  static DefectParams from_delta(double delta);    // requires delta in (0,1)
  static DefectParams from_lambda(double lambda);  // any finite lambda

  double lambda() const { return lambda_; }
  double delta() const { return delta_; }

 private:
  DefectParams(double lambda, double delta) : lambda_(lambda), delta_(delta) {}
  double lambda_;
  double delta_;
};

inline DefectParams defect_from_lambda(double lambda) {
  return DefectParams::from_lambda(lambda);
}

struct BoundState {
  int n;             // principal index, >= 1
  double s;          // n - delta, never an integer
  double energy_e0;  // -1/s^2
  double energy_ghz;
  double energy_ev;
  double norm_x0;    // N in units of x0^{-1/2}, positive by convention
};

// cot(pi s) + lambda/pi; vanishes exactly at the eigen-indices s = n - delta.
// Test/oracle helper, not on the production path.  Throws DomainError at
// integer s.
double eigencondition_residual(double s, const DefectParams& params);

// Throws DomainError for n < 1.
BoundState level(int n, const DefectParams& params,
                 const model::MaterialScales& scales);

// <x>_n = x0 [3n^2 - delta(2n - delta)] as the closed form of the source
// model; the quadrature in the wavefunction module adjudicates it (see
// verify).  Returned in nm.  Throws DomainError for n < 1.
double mean_x_nm(int n, const DefectParams& params,
                 const model::MaterialScales& scales);
double mean_x_x0(int n, const DefectParams& params);  // same, in units of x0

// Levels n = 1..n_max.  Throws LimitError for n_max > 50, DomainError for
// n_max < 1.
std::vector<BoundState> spectrum_table(int n_max, const DefectParams& params,
                                       const model::MaterialScales& scales);

namespace detail {
// ln N + sign bookkeeping for the two branch prefactors N*Gamma(1-s) and
// N*Gamma(1+s); shared with the wavefunction module.
struct BranchScales {
  double pos;  // N * Gamma(1-s), signed
  double neg;  // N * Gamma(1+s), signed
  double norm; // N, positive
};
BranchScales branch_scales(double s, double x0_units);
}  // namespace detail

}  // namespace surfstate::spectrum
