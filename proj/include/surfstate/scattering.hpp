// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "surfstate/spectrum.hpp"

// Above-barrier transmission through the contact term alone:
// T(E) = [1 + lambda^2 E0 / E]^{-1}, crossing 1/2 at Ebar = lambda^2 E0.

namespace surfstate::scattering {

// E in eV, > 0 (DomainError otherwise).
double transmission(double energy_ev, const spectrum::DefectParams& params,
                    const model::MaterialScales& scales);

// Ebar = lambda^2 E0 in eV.
double barrier_energy_ev(const spectrum::DefectParams& params,
                         const model::MaterialScales& scales);

struct TransmissionPoint {
  double energy_ev;
  double t;
};

struct TransmissionCurve {
  std::vector<TransmissionPoint> points;  // strictly increasing in energy
  double barrier_ebar_ev;
};

// Uniform energy grid from e_min to e_max (eV); the half-transmission point
// Ebar is inserted as an extra sample when it falls inside the range.
TransmissionCurve transmission_curve(double e_min_ev, double e_max_ev,
                                     int n_points,
                                     const spectrum::DefectParams& params,
                                     const model::MaterialScales& scales);

}  // namespace surfstate::scattering
