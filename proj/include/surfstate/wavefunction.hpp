// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "surfstate/spectrum.hpp"

// Piecewise eigenfunctions
//
//   Phi(x) = N Gamma(1-s) W_{ s,1/2}(z),  x >= 0,
//   Phi(x) = N Gamma(1+s) W_{-s,1/2}(|z|), x <= 0,   z = x/(s x0),
//
// normalized so both one-sided limits at x = 0 equal N.  The source model
// prints the prefactor pair Gamma(s-1)/Gamma(s+1), which does not make the
// two limits equal; that literal convention is kept behind a flag so the
// discontinuity can be measured.

namespace surfstate::wavefunction {

enum class Prefactors : std::uint8_t {
  continuous,     // Gamma(1-s) / Gamma(1+s); Phi continuous by construction
  paper_literal,  // Gamma(s-1) / Gamma(s+1); generally discontinuous at 0
};

// Phi(x) with x in nm; result in nm^{-1/2}.  Throws AccuracyError if the
// Whittaker evaluation cannot be certified at the requested point.
double evaluate_phi(double x_nm, const spectrum::BoundState& state,
                    const spectrum::DefectParams& params,
                    const model::MaterialScales& scales,
                    Prefactors convention = Prefactors::continuous);

// Same in internal units: x in x0, Phi in x0^{-1/2}.
double evaluate_phi_x0(double x_over_x0, const spectrum::BoundState& state,
                       const spectrum::DefectParams& params,
                       Prefactors convention = Prefactors::continuous);

// Relative defect of the derivative-jump boundary condition,
//   [Phi'(+h) - Phi'(-h) - (lambda/x0) Phi(0)] / |(lambda/x0) Phi(0)|,
// with one-sided central differences of step h/2 evaluated at +-h (h in x0
// units).  The log-divergent slope parts cancel between the sides, so the
// residual vanishes as h -> 0 up to O(h ln h).  Requires
// 2e-7 <= h <= 1e-3 (DomainError otherwise).
double jump_residual(const spectrum::BoundState& state,
                     const spectrum::DefectParams& params, double h_x0);

struct QuadratureValue {
  double value;
  double abs_err;  // quadrature + evaluation error budget
};

// integral of Phi^2 dx over the whole axis (dimensionless; 1 for a
// normalized state).  Tails are cut where rigorous envelope bounds put the
// remainder below 1e-12.  Throws AccuracyError on non-convergence.
QuadratureValue quadrature_norm(const spectrum::BoundState& state,
                                const spectrum::DefectParams& params);

// integral of x Phi^2 dx, in units of x0 (multiply by scales.x0_nm for nm).
QuadratureValue quadrature_mean_x_x0(const spectrum::BoundState& state,
                                     const spectrum::DefectParams& params);

struct ProfileSample {
  double x_nm;
  double x_over_x0;
  double phi;  // nm^{-1/2}
};

struct WavefunctionProfile {
  spectrum::BoundState state;
  std::vector<ProfileSample> samples;   // strictly increasing in x
  double branch_scale_pos;              // prefactor applied for x >= 0
  double branch_scale_neg;              // prefactor applied for x <= 0
};

WavefunctionProfile sample_profile(const spectrum::BoundState& state,
                                   const spectrum::DefectParams& params,
                                   const model::MaterialScales& scales,
                                   double x_min_x0, double x_max_x0,
                                   int n_samples);

// Sign changes of Phi on x > 0 (oscillation count; n-1 for the n-th level).
int count_nodes_positive_side(const spectrum::BoundState& state,
                              const spectrum::DefectParams& params);

}  // namespace surfstate::wavefunction
