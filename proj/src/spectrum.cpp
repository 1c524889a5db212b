// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/spectrum.hpp"

#include <cmath>
#include <string>

#include "surfstate/specfun.hpp"

namespace surfstate::spectrum {

using specfun::pi;

DefectParams DefectParams::from_delta(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0))
    throw DomainError("delta must lie in (0,1), got " + std::to_string(delta));
  // cot(pi * 1/2) = 0 exactly through the reduced form
  const double lambda = pi * specfun::cot_pi(delta);
  return DefectParams(lambda, delta);
}

DefectParams DefectParams::from_lambda(double lambda) {
  if (!std::isfinite(lambda))
    throw DomainError("lambda must be finite");
  // delta = (1/pi) arccot(lambda/pi) on the (0,1) branch; atan2 gives the
  // angle of the point (lambda, pi), which is exactly that arccot.
  const double delta = std::atan2(pi, lambda) / pi;
  return DefectParams(lambda, delta);
}

double eigencondition_residual(double s, const DefectParams& params) {
  if (!(s > 0.0)) throw DomainError("eigencondition requires s > 0");
  if (s == std::round(s))
    throw DomainError("cot(pi s) pole at integer s = " + std::to_string(s));
  return specfun::cot_pi(s) + params.lambda() / pi;
}

namespace detail {

BranchScales branch_scales(double s, double x0_units) {
  // N = [sqrt(2 x0 s) Gamma(1-s) Gamma(1+s)]^{-1}, taken positive; the
  // gamma factors are combined in log space (Gamma(1-s) alternates sign
  // with the integer part of s).
  const specfun::SignedLogGamma g_minus = specfun::log_gamma(1.0 - s);
  const specfun::SignedLogGamma g_plus = specfun::log_gamma(1.0 + s);
  const double log_root = 0.5 * std::log(2.0 * x0_units * s);
  BranchScales out{};
  out.norm = std::exp(-(log_root + g_minus.log_abs + g_plus.log_abs));
  // N * Gamma(1-s) = sign(Gamma(1-s)) * exp(-log_root - ln|Gamma(1+s)|)
  out.pos = g_minus.sign * std::exp(-(log_root + g_plus.log_abs));
  out.neg = g_plus.sign * std::exp(-(log_root + g_minus.log_abs));
  return out;
}

}  // namespace detail

BoundState level(int n, const DefectParams& params,
                 const model::MaterialScales& scales) {
  if (n < 1) throw DomainError("level index n must be >= 1");
  BoundState st{};
  st.n = n;
  st.s = n - params.delta();
  st.energy_e0 = -1.0 / (st.s * st.s);
  st.energy_ghz = st.energy_e0 * scales.e0_ghz;
  st.energy_ev = st.energy_e0 * scales.e0_ev;
  st.norm_x0 = detail::branch_scales(st.s, 1.0).norm;
  return st;
}

double mean_x_x0(int n, const DefectParams& params) {
  if (n < 1) throw DomainError("mean_x index n must be >= 1");
  const double d = params.delta();
  return 3.0 * n * n - d * (2.0 * n - d);
}

double mean_x_nm(int n, const DefectParams& params,
                 const model::MaterialScales& scales) {
  return mean_x_x0(n, params) * scales.x0_nm;
}

std::vector<BoundState> spectrum_table(int n_max, const DefectParams& params,
                                       const model::MaterialScales& scales) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (n_max > 50)
    throw LimitError("n_max capped at 50 (norm prefactors exceed log-space "
                     "comfort above that)");
  std::vector<BoundState> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) out.push_back(level(n, params, scales));
  return out;
}

}  // namespace surfstate::spectrum
