// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "surfstate/errors.hpp"

// Self-contained special functions for the image-charge surface-state model:
// signed log-gamma, digamma, and the Whittaker function W_{kappa,1/2}(z) for
// real kappa and z > 0.  Everything here is a pure function of its arguments.

namespace surfstate::specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209;
inline constexpr double pi = 3.14159265358979323846264338;

// ln|Gamma(x)| with the sign of Gamma(x) tracked separately, so that
// prefactors like Gamma(1-s) (which alternates sign as s crosses integers)
// can be combined in log space without overflow.
struct SignedLogGamma {
  double log_abs;
  int sign;  // -1 or +1
};

// Throws PoleError at x = 0, -1, -2, ...
SignedLogGamma log_gamma(double x);

// 1/Gamma(x); finite for every real x (zero at the poles).
double gamma_reciprocal(double x);

// psi(x) to <= 1e-12 relative accuracy away from its zeros; recurrence plus
// Bernoulli asymptotic series, reflection for x < 0.  Throws PoleError at
// non-positive integers.
double digamma(double x);

// cot(pi*x) with exact argument reduction (period 1).  Throws PoleError at
// integer x.
double cot_pi(double x);

enum class WhittakerMethod : std::uint8_t {
  log_series,          // small-z logarithmic-case expansion of U(1-kappa,2,z)
  asymptotic,          // large-z 2F0 series with term-truncation control
  laplace_quadrature,  // real Laplace integral for U, kappa < 1 only
};

struct WhittakerEval {
  double value;
  WhittakerMethod method;
  double est_rel_err;
};

// W_{kappa,1/2}(z) = e^{-z/2} z U(1-kappa, 2, z).  Supported domain is
// kappa in [-20, 20], z in (0, 200].  The estimate est_rel_err is tracked
// honestly (cancellation plus truncation); the call throws AccuracyError
// instead of returning a value it cannot certify to 1e-10.
WhittakerEval whittaker_w_half(double kappa, double z);

// Same evaluation without the 1e-10 gate; callers that weigh the error
// against a local integrand magnitude use this and do their own accounting.
WhittakerEval whittaker_w_half_lenient(double kappa, double z);

enum class Side : std::uint8_t { positive, negative };

// Leading small-z expansion of the one-sided slope (x0/N) dPhi/dx of the
// continuity-normalized branch Gamma(1-+s) W_{+-s,1/2}(|z|):
//
//   positive side:  -2C - 1/(2s) - ln z - psi(1-s)
//   negative side:  -2C + 1/(2s) - ln|z| - psi(1+s)
//
// The difference of the two sides is -pi cot(pi s), which is the contact
// coupling lambda on the eigencondition; the remainder is O(z ln z).
// Verification-only helper; the eigenvalue path never calls it.
// Throws DomainError for |z| > 0.1 (outside the asymptotic regime).
double whittaker_slope_small_z(double s, double z, Side side);

namespace detail {

// Individual evaluation routes, exposed for the method-agreement and
// honesty tests.  Each returns its own error estimate and never throws on
// accuracy grounds.
WhittakerEval whittaker_log_series(double kappa, double z);
WhittakerEval whittaker_asymptotic(double kappa, double z);
WhittakerEval whittaker_laplace(double kappa, double z);  // requires kappa < 1

}  // namespace detail

}  // namespace surfstate::specfun
