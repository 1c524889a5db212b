// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "surfstate/quadrature.hpp"
#include "surfstate/specfun.hpp"

namespace surfstate::wavefunction {

namespace {

using spectrum::detail::BranchScales;

struct PhiEval {
  double value;
  double est_rel_err;
};

BranchScales scales_for(const spectrum::BoundState& state,
                        Prefactors convention) {
  BranchScales b = spectrum::detail::branch_scales(state.s, 1.0);
  if (convention == Prefactors::paper_literal) {
    // N Gamma(s-1) / N Gamma(s+1) as printed in the source model; the two
    // z -> 0 limits then differ and the interface value is discontinuous.
    const double s = state.s;
    const auto gm = specfun::log_gamma(s - 1.0);
    const auto gp = specfun::log_gamma(s + 1.0);
    const double log_n = std::log(b.norm);
    b.pos = gm.sign * std::exp(log_n + gm.log_abs);
    b.neg = gp.sign * std::exp(log_n + gp.log_abs);
  }
  return b;
}

PhiEval phi_lenient(double x_x0, const spectrum::BoundState& state,
                    const BranchScales& b) {
  const double s = state.s;
  if (x_x0 == 0.0) {
    // both one-sided limits equal N for the continuous convention; for the
    // literal convention report the positive-side limit
    const double lim = b.pos * specfun::gamma_reciprocal(1.0 - s);
    return {lim, 4e-16};
  }
  const double z = std::abs(x_x0) / s;
  const double kappa = (x_x0 > 0.0) ? s : -s;
  const auto w = specfun::whittaker_w_half_lenient(kappa, z);
  const double pref = (x_x0 > 0.0) ? b.pos : b.neg;
  return {pref * w.value, w.est_rel_err};
}

// Envelope bounds used to place quadrature tail cuts:
//   W_{-s,1/2}(z) <= e^{-z/2} z^{-s}            (exact, from the Laplace rep)
//   W_{ s,1/2}(z) <= 2 e^{-z/2} z^{ s}          (asymptotic regime z >~ 4s^2)
double tail_cut_positive(double s, double pref_sq, double tol) {
  double z = std::max(30.0, 4.0 * s * s + 20.0);
  for (int i = 0; i < 200; ++i) {
    const double bound = 4.0 * pref_sq * s * std::exp(-z + 2.0 * s * std::log(z)) /
                         std::max(0.5, 1.0 - 2.0 * s / z);
    if (bound < tol) break;
    z += 4.0;
  }
  return z;
}

double tail_cut_negative(double s, double pref_sq, double tol) {
  double z = 15.0;
  for (int i = 0; i < 200; ++i) {
    const double bound = pref_sq * s * std::exp(-z - 2.0 * s * std::log(z));
    if (bound < tol) break;
    z += 3.0;
  }
  return z;
}

struct SideIntegral {
  double value;
  double abs_err;
};

// integral of weight(x) Phi^2 over one side, with the Whittaker evaluation
// error folded into the budget through a second quadrature pass.
SideIntegral integrate_side(const spectrum::BoundState& state,
                            const BranchScales& b, bool positive,
                            bool x_weight) {
  const double s = state.s;
  const double pref = positive ? b.pos : b.neg;
  const double pref_sq = pref * pref;
  const double z_cut = positive ? tail_cut_positive(s, pref_sq, 1e-13)
                                : tail_cut_negative(s, pref_sq, 1e-13);
  const double x_cut = z_cut * s;

  auto phi2 = [&](double x) {
    const double xs = positive ? x : -x;
    const PhiEval p = phi_lenient(xs, state, b);
    const double w = x_weight ? x : 1.0;
    return w * p.value * p.value;
  };
  auto phi2_err = [&](double x) {
    const double xs = positive ? x : -x;
    const PhiEval p = phi_lenient(xs, state, b);
    const double w = x_weight ? x : 1.0;
    return 2.0 * std::abs(w) * p.value * p.value *
           std::min(1.0, p.est_rel_err);
  };

  // split at the scale of the turning point so the subdivision starts from
  // a sensible partition
  const double mid = std::min(x_cut, std::max(1.0, 3.0 * s * s));
  quadrature::Result r1 = quadrature::integrate(phi2, 0.0, mid, 1e-10, 1e-9);
  quadrature::Result r2 =
      quadrature::integrate(phi2, mid, x_cut, 1e-10, 1e-9);
  quadrature::Result e1 =
      quadrature::integrate(phi2_err, 0.0, mid, 1e-11, 1e-2);
  quadrature::Result e2 =
      quadrature::integrate(phi2_err, mid, x_cut, 1e-11, 1e-2);

  SideIntegral out{};
  out.value = r1.value + r2.value;
  out.abs_err = r1.abs_err + r2.abs_err + std::abs(e1.value) +
                std::abs(e2.value) + 1e-13;
  if (!positive && x_weight) out.value = -out.value;
  return out;
}

}  // namespace

double evaluate_phi_x0(double x_over_x0, const spectrum::BoundState& state,
                       const spectrum::DefectParams& params,
                       Prefactors convention) {
  (void)params;
  const BranchScales b = scales_for(state, convention);
  if (x_over_x0 == 0.0 && convention == Prefactors::continuous) return b.norm;
  if (x_over_x0 == 0.0) return phi_lenient(0.0, state, b).value;
  const double z = std::abs(x_over_x0) / state.s;
  const double kappa = (x_over_x0 > 0.0) ? state.s : -state.s;
  const auto w = specfun::whittaker_w_half(kappa, z);  // strict
  return ((x_over_x0 > 0.0) ? b.pos : b.neg) * w.value;
}

double evaluate_phi(double x_nm, const spectrum::BoundState& state,
                    const spectrum::DefectParams& params,
                    const model::MaterialScales& scales,
                    Prefactors convention) {
  const double phi_x0 =
      evaluate_phi_x0(x_nm / scales.x0_nm, state, params, convention);
  return phi_x0 / std::sqrt(scales.x0_nm);
}

double jump_residual(const spectrum::BoundState& state,
                     const spectrum::DefectParams& params, double h_x0) {
  if (!(h_x0 >= 2e-7) || !(h_x0 <= 1e-3))
    throw DomainError("jump_residual step h must lie in [2e-7, 1e-3] x0");
  const BranchScales b = scales_for(state, Prefactors::continuous);
  const double d = 0.5 * h_x0;
  auto phi = [&](double x) { return phi_lenient(x, state, b).value; };
  const double dp = (phi(h_x0 + d) - phi(h_x0 - d)) / (2.0 * d);
  const double dm = (phi(-h_x0 + d) - phi(-h_x0 - d)) / (2.0 * d);
  const double jump_target = params.lambda() * b.norm;
  const double denom = std::max(std::abs(jump_target), b.norm);
  return (dp - dm - jump_target) / denom;
}

QuadratureValue quadrature_norm(const spectrum::BoundState& state,
                                const spectrum::DefectParams& params) {
  (void)params;
  const BranchScales b = scales_for(state, Prefactors::continuous);
  const SideIntegral pos = integrate_side(state, b, true, false);
  const SideIntegral neg = integrate_side(state, b, false, false);
  return {pos.value + neg.value, pos.abs_err + neg.abs_err};
}

QuadratureValue quadrature_mean_x_x0(const spectrum::BoundState& state,
                                     const spectrum::DefectParams& params) {
  (void)params;
  const BranchScales b = scales_for(state, Prefactors::continuous);
  const SideIntegral pos = integrate_side(state, b, true, true);
  const SideIntegral neg = integrate_side(state, b, false, true);
  return {pos.value + neg.value, pos.abs_err + neg.abs_err};
}

WavefunctionProfile sample_profile(const spectrum::BoundState& state,
                                   const spectrum::DefectParams& params,
                                   const model::MaterialScales& scales,
                                   double x_min_x0, double x_max_x0,
                                   int n_samples) {
  (void)params;
  if (n_samples < 2 || !(x_max_x0 > x_min_x0))
    throw ConfigError("profile needs x_max > x_min and at least 2 samples");
  const BranchScales b = scales_for(state, Prefactors::continuous);
  WavefunctionProfile prof{};
  prof.state = state;
  prof.branch_scale_pos = b.pos;
  prof.branch_scale_neg = b.neg;
  prof.samples.reserve(static_cast<std::size_t>(n_samples));
  const double step = (x_max_x0 - x_min_x0) / (n_samples - 1);
  const double root_x0 = std::sqrt(scales.x0_nm);
  for (int i = 0; i < n_samples; ++i) {
    const double x = x_min_x0 + i * step;
    const PhiEval p = phi_lenient(x, state, b);
    prof.samples.push_back({x * scales.x0_nm, x, p.value / root_x0});
  }
  return prof;
}

int count_nodes_positive_side(const spectrum::BoundState& state,
                              const spectrum::DefectParams& params) {
  (void)params;
  const BranchScales b = scales_for(state, Prefactors::continuous);
  const double s = state.s;
  const double z_max = 3.0 * s * s + 25.0;
  const int m = 500 * state.n;
  int sign_changes = 0;
  double prev = phi_lenient(1e-9, state, b).value;
  for (int i = 1; i <= m; ++i) {
    // uniform in sqrt(z): resolves the near-origin oscillations
    const double frac = static_cast<double>(i) / m;
    const double z = frac * frac * z_max;
    const double x = z * s;
    const double cur = phi_lenient(x, state, b).value;
    if (cur == 0.0) continue;
    if (prev != 0.0 && std::signbit(cur) != std::signbit(prev))
      ++sign_changes;
    prev = cur;
  }
  return sign_changes;
}

}  // namespace surfstate::wavefunction
