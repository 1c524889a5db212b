// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/model.hpp"

#include <string>

namespace surfstate::model {

MaterialScales derive_scales(double epsilon, const PhysicalConstants& c) {
  if (!(epsilon > 1.0))
    throw DomainError("derive_scales requires epsilon > 1 (no bound states "
                      "otherwise), got " + std::to_string(epsilon));
  MaterialScales s{};
  s.epsilon = epsilon;
  s.z_strength = (epsilon - 1.0) / (4.0 * (epsilon + 1.0));
  s.x0_nm = c.bohr_radius_nm() / (2.0 * s.z_strength);
  s.e0_ev = s.z_strength * s.z_strength * c.rydberg_ev();
  s.e0_ghz = ev_to_ghz(s.e0_ev, c);
  s.constants = c;
  return s;
}

double ghz_to_ev(double f_ghz, const PhysicalConstants& c) {
  return f_ghz * (c.planck_ev_s * 1e9);
}

double ev_to_ghz(double e_ev, const PhysicalConstants& c) {
  return e_ev / (c.planck_ev_s * 1e9);
}

}  // namespace surfstate::model
