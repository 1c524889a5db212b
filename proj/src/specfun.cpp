// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "surfstate/quadrature.hpp"

namespace surfstate::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// sin(pi x) with exact reduction; the integer part of a double is exact, so
// the sign bookkeeping never drifts for large |x|.
double sin_pi(double x) {
  double n = std::floor(x);
  double r = x - n;  // in [0, 1)
  double mag = (r > 0.5) ? std::sin(pi * (1.0 - r)) : std::sin(pi * r);
  bool odd = std::fmod(n, 2.0) != 0.0;
  return odd ? -mag : mag;
}

// Lanczos approximation, g = 607/128, Godfrey's 15 coefficients.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

double log_gamma_positive(double x) {
  // valid for x >= 0.5
  double sum = kLanczosC[0];
  for (int i = 1; i < 15; ++i) sum += kLanczosC[i] / (x + (i - 1));
  const double t = x + kLanczosG - 0.5;
  return 0.5 * std::log(2.0 * pi) + (x - 0.5) * std::log(t) - t +
         std::log(sum);
}

}  // namespace

SignedLogGamma log_gamma(double x) {
  if (is_nonpositive_integer(x))
    throw PoleError("log_gamma pole at x = " + std::to_string(x));
  if (x >= 0.5) return {log_gamma_positive(x), +1};
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = sin_pi(x);
  const double log_abs =
      std::log(pi) - std::log(std::abs(s)) - log_gamma_positive(1.0 - x);
  return {log_abs, s > 0.0 ? +1 : -1};
}

double gamma_reciprocal(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const SignedLogGamma g = log_gamma(x);
  return g.sign * std::exp(-g.log_abs);
}

double cot_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;  // exact; cot(pi x) has period 1
  if (r == 0.0) throw PoleError("cot_pi pole at x = " + std::to_string(x));
  return std::cos(pi * r) / std::sin(pi * r);
}

double digamma(double x) {
  if (is_nonpositive_integer(x))
    throw PoleError("digamma pole at x = " + std::to_string(x));
  if (x < 0.0) return digamma(1.0 - x) - pi * cot_pi(x);

  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_{2n} / (2n x^{2n});  next term < 5e-17
  // at x = 10.
  const double z = 1.0 / (x * x);
  const double series =
      z * (1.0 / 12 +
           z * (-1.0 / 120 +
                z * (1.0 / 252 +
                     z * (-1.0 / 240 +
                          z * (1.0 / 132 +
                               z * (-691.0 / 32760 + z * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 / x - series;
}

namespace detail {

// Logarithmic-case expansion of W = e^{-z/2} z U(1-kappa, 2, z):
//
//   W e^{z/2} = 1/Gamma(1-kappa)
//             + z/Gamma(-kappa) * sum_k (1-kappa)_k z^k / (k! (k+1)!)
//               * [ln z + psi(1-kappa+k) - psi(k+1) - psi(k+2)].
//
// Convergent for all z; the partial sums grow like e^z before settling, so
// the cancellation against the final value is tracked into est_rel_err.
// Not valid for kappa a positive integer (psi poles); the selector routes
// those to the terminating forms.
WhittakerEval whittaker_log_series(double kappa, double z) {
  const double a = 1.0 - kappa;
  const double lead = gamma_reciprocal(a);
  const double b = z * gamma_reciprocal(-kappa);

  double sum = 0.0;
  double abs_sum = 0.0;
  double last_term = 0.0;
  if (b != 0.0) {
    const double log_z = std::log(z);
    double psi_a = digamma(a);
    double psi1 = -euler_gamma;        // psi(1)
    double psi2 = 1.0 - euler_gamma;   // psi(2)
    double coeff = 1.0;                // (a)_k z^k / (k! (k+1)!)
    constexpr int kMax = 600;
    int k = 0;
    for (; k < kMax; ++k) {
      const double bracket = log_z + psi_a - psi1 - psi2;
      const double term = coeff * bracket;
      sum += term;
      abs_sum += std::abs(term);
      last_term = term;
      coeff *= z * (a + k) / ((k + 1.0) * (k + 2.0));
      psi_a += 1.0 / (a + k);
      psi1 += 1.0 / (k + 1.0);
      psi2 += 1.0 / (k + 2.0);
      const double next_bound =
          std::abs(coeff) * (std::abs(log_z) + std::abs(psi_a) + psi1 + psi2);
      if (k > 2 && next_bound < 1e-3 * kEps * (abs_sum + 1e-300)) break;
    }
    if (k == kMax) return {0.0, WhittakerMethod::log_series, kInf};
  }

  const double pre = lead + b * sum;
  const double value = std::exp(-0.5 * z) * pre;
  if (pre == 0.0 || !std::isfinite(pre))
    return {value, WhittakerMethod::log_series, kInf};
  const double big = std::abs(lead) + std::abs(b) * abs_sum;
  const double est = (big / std::abs(pre)) * kEps * 8.0 +
                     std::abs(b * last_term) / std::abs(pre);
  return {value, WhittakerMethod::log_series, est};
}

// Poincare expansion W ~ e^{-z/2} z^kappa 2F0(1-kappa, -kappa;; -1/z),
// truncated at the smallest term.  Terminates exactly when kappa is a
// positive integer (Laguerre case).
WhittakerEval whittaker_asymptotic(double kappa, double z) {
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  double trunc = kInf;
  constexpr int kMax = 200;
  for (int k = 0; k < kMax; ++k) {
    const double next = term * (1.0 - kappa + k) * (-kappa + k) /
                        ((k + 1.0) * (-z));
    if (next == 0.0) {
      trunc = 0.0;  // terminated exactly
      break;
    }
    if (std::abs(next) >= std::abs(term)) {
      trunc = std::abs(next);  // divergence onset; remainder ~ first omitted
      break;
    }
    sum += next;
    abs_sum += std::abs(next);
    term = next;
    if (std::abs(next) < 0.01 * kEps * std::abs(sum)) {
      trunc = std::abs(next);
      break;
    }
  }
  const double value = std::exp(-0.5 * z + kappa * std::log(z)) * sum;
  if (sum == 0.0) return {value, WhittakerMethod::asymptotic, kInf};
  const double est =
      trunc / std::abs(sum) + (abs_sum / std::abs(sum)) * kEps * 4.0;
  return {value, WhittakerMethod::asymptotic, est};
}

// Real Laplace integral, kappa < 1 only:
//   U(a,2,z) = 1/Gamma(a) * I,  I = int_0^inf e^{-zt} t^{a-1} (1+t)^{1-a} dt,
// a = 1 - kappa > 0.  The integrand has no sign changes, so there is no
// cancellation; accuracy is set by the quadrature alone.
WhittakerEval whittaker_laplace(double kappa, double z) {
  const double a = 1.0 - kappa;
  if (a <= 0.0 || z <= 0.0)
    return {0.0, WhittakerMethod::laplace_quadrature, kInf};

  const SignedLogGamma lg = log_gamma(a);

  // crude magnitude of I ~ Gamma(a) z^{-a} to place the tail cut
  const double log_i_est = lg.log_abs - a * std::log(z);
  double t_peak = (a > 1.0)
                      ? 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * (a - 1.0) / z))
                      : 0.0;
  double t_cut = 3.0 * t_peak + (55.0 + std::abs(log_i_est)) / z + 1.0 / z;

  quadrature::Result q{};
  try {
    if (a >= 1.0) {
      auto f = [a, z](double t) {
        if (t <= 0.0) return (a == 1.0) ? 1.0 : 0.0;
        return std::exp(-z * t + (a - 1.0) * std::log(t / (1.0 + t)));
      };
      q = quadrature::integrate(f, 0.0, t_cut, 0.0, 1e-13, 4000);
    } else {
      // remove the t^{a-1} endpoint singularity with tau = t^a
      auto f = [a, z](double tau) {
        if (tau <= 0.0) return 1.0 / a;
        const double t = std::pow(tau, 1.0 / a);
        return std::exp(-z * t + (1.0 - a) * std::log1p(t)) / a;
      };
      q = quadrature::integrate(f, 0.0, std::pow(t_cut, a), 0.0, 1e-13, 4000);
    }
  } catch (const AccuracyError&) {
    return {0.0, WhittakerMethod::laplace_quadrature, kInf};
  }
  if (q.value <= 0.0)
    return {0.0, WhittakerMethod::laplace_quadrature, kInf};

  // W = e^{-z/2} z / Gamma(a) * I, assembled in logs for headroom
  const double log_w = -0.5 * z + std::log(z) - lg.log_abs + std::log(q.value);
  const double value = lg.sign * std::exp(log_w);
  const double tail = std::exp(-z * t_cut) / z / q.value;  // envelope bound
  const double est = q.abs_err / q.value + tail + 2e-14;
  return {value, WhittakerMethod::laplace_quadrature, est};
}

// Ascending terminating form for kappa = m >= 1 integer:
//   U(1-m, 2, z) = (-1)^{m-1} (2)_{m-1} M(1-m, 2, z),
// the small-z-stable complement of the (also terminating) asymptotic form.
WhittakerEval whittaker_integer_ascending(int m, double z) {
  double poch = 1.0;  // (2)_{m-1}
  for (int i = 0; i < m - 1; ++i) poch *= 2.0 + i;
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  for (int k = 0; k < m - 1; ++k) {
    term *= (1.0 - m + k) * z / ((2.0 + k) * (k + 1.0));
    sum += term;
    abs_sum += std::abs(term);
  }
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  const double value = std::exp(-0.5 * z) * z * sign * poch * sum;
  if (sum == 0.0) return {value, WhittakerMethod::log_series, kInf};
  const double est = (abs_sum / std::abs(sum)) * kEps * 4.0;
  return {value, WhittakerMethod::log_series, est};
}

}  // namespace detail

namespace {

WhittakerEval whittaker_best_effort(double kappa, double z) {
  using detail::whittaker_asymptotic;
  using detail::whittaker_integer_ascending;
  using detail::whittaker_laplace;
  using detail::whittaker_log_series;

  constexpr double kTarget = 1e-11;

  if (kappa == std::round(kappa) && kappa >= 0.0) {
    if (kappa == 0.0)
      return {std::exp(-0.5 * z), WhittakerMethod::log_series, 2.0 * kEps};
    const int m = static_cast<int>(kappa);
    WhittakerEval asc = whittaker_integer_ascending(m, z);
    if (asc.est_rel_err <= kTarget) return asc;
    WhittakerEval asym = whittaker_asymptotic(kappa, z);
    return (asym.est_rel_err < asc.est_rel_err) ? asym : asc;
  }

  WhittakerEval best{0.0, WhittakerMethod::log_series, kInf};
  if (z <= 46.0) {
    best = whittaker_log_series(kappa, z);
    if (best.est_rel_err <= kTarget) return best;
  }
  WhittakerEval asym = whittaker_asymptotic(kappa, z);
  if (asym.est_rel_err < best.est_rel_err) best = asym;
  if (best.est_rel_err <= kTarget) return best;
  if (kappa < 1.0 && z >= 0.25) {
    WhittakerEval lap = whittaker_laplace(kappa, z);
    if (lap.est_rel_err < best.est_rel_err) best = lap;
  }
  return best;
}

void check_whittaker_domain(double kappa, double z) {
  if (!(z > 0.0))
    throw DomainError("whittaker_w_half requires z > 0, got z = " +
                      std::to_string(z));
  if (!(std::abs(kappa) <= 20.0) || !(z <= 200.0))
    throw DomainError("whittaker_w_half outside supported domain: kappa = " +
                      std::to_string(kappa) + ", z = " + std::to_string(z));
}

}  // namespace

WhittakerEval whittaker_w_half(double kappa, double z) {
  check_whittaker_domain(kappa, z);
  WhittakerEval best = whittaker_best_effort(kappa, z);
  if (!(best.est_rel_err <= 1e-10))
    throw AccuracyError(
        "whittaker_w_half: no method reaches 1e-10 at kappa = " +
        std::to_string(kappa) + ", z = " + std::to_string(z) +
        " (best estimate " + std::to_string(best.est_rel_err) + ")");
  return best;
}

WhittakerEval whittaker_w_half_lenient(double kappa, double z) {
  check_whittaker_domain(kappa, z);
  return whittaker_best_effort(kappa, z);
}

double whittaker_slope_small_z(double s, double z, Side side) {
  if (!(s > 0.0) || s == std::round(s))
    throw DomainError("slope expansion requires non-integer s > 0");
  const double az = std::abs(z);
  if (!(az > 0.0) || az > 0.1)
    throw DomainError("slope expansion requires 0 < |z| <= 0.1");
  if (side == Side::positive)
    return -2.0 * euler_gamma - 0.5 / s - std::log(az) - digamma(1.0 - s);
  return -2.0 * euler_gamma + 0.5 / s - std::log(az) - digamma(1.0 + s);
}

}  // namespace surfstate::specfun
