// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace surfstate::scattering {

double barrier_energy_ev(const spectrum::DefectParams& params,
                         const model::MaterialScales& scales) {
  const double lambda = params.lambda();
  return lambda * lambda * scales.e0_ev;
}

double transmission(double energy_ev, const spectrum::DefectParams& params,
                    const model::MaterialScales& scales) {
  if (!(energy_ev > 0.0))
    throw DomainError("transmission requires E > 0, got " +
                      std::to_string(energy_ev));
  return 1.0 / (1.0 + barrier_energy_ev(params, scales) / energy_ev);
}

TransmissionCurve transmission_curve(double e_min_ev, double e_max_ev,
                                     int n_points,
                                     const spectrum::DefectParams& params,
                                     const model::MaterialScales& scales) {
  if (!(e_min_ev > 0.0) || !(e_max_ev > e_min_ev) || n_points < 2)
    throw ConfigError("transmission curve needs 0 < e_min < e_max and at "
                      "least 2 points");
  TransmissionCurve curve{};
  curve.barrier_ebar_ev = barrier_energy_ev(params, scales);
  curve.points.reserve(static_cast<std::size_t>(n_points) + 1);
  const double step = (e_max_ev - e_min_ev) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double e = e_min_ev + i * step;
    curve.points.push_back({e, transmission(e, params, scales)});
  }
  const double ebar = curve.barrier_ebar_ev;
  if (ebar > e_min_ev && ebar < e_max_ev) {
    curve.points.push_back({ebar, transmission(ebar, params, scales)});
    std::sort(curve.points.begin(), curve.points.end(),
              [](const TransmissionPoint& a, const TransmissionPoint& b) {
                return a.energy_ev < b.energy_ev;
              });
  }
  return curve;
}

}  // namespace surfstate::scattering
