// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace surfstate::quadrature {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Segment {
  double a, b;
  double value;
  double err;
};

struct SegmentOrder {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.err < y.err;
  }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b,
                 long& n_evals) {
  const double c = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - half * kXgk[i]);
    fv[14 - i] = f(c + half * kXgk[i]);
  }
  fv[7] = f(c);
  n_evals += 15;

  double resk = 0.0;
  double resabs = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double sum = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
    resk += kWgk[i] * sum;
    resabs += kWgk[i] * ((i == 7) ? std::abs(fv[7])
                                  : std::abs(fv[i]) + std::abs(fv[14 - i]));
  }
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 3; ++i)
    resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fv[7] - reskh);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] *
              (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));

  double err = std::abs(resk - resg) * half;
  resasc *= half;
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps_floor =
      50.0 * std::numeric_limits<double>::epsilon() * resabs * half;
  err = std::max(err, eps_floor);

  return {a, b, resk * half, err};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol, int max_intervals) {
  long n_evals = 0;
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> queue;
  queue.push(evaluate(f, a, b, n_evals));
  double total = queue.top().value;
  double total_err = queue.top().err;

  int intervals = 1;
  while (total_err > abs_tol && total_err > rel_tol * std::abs(total)) {
    if (intervals >= max_intervals)
      throw AccuracyError("adaptive quadrature did not converge: error " +
                          std::to_string(total_err) + " after " +
                          std::to_string(intervals) + " intervals");
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = evaluate(f, worst.a, mid, n_evals);
    Segment right = evaluate(f, mid, worst.b, n_evals);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }
  return {total, total_err, n_evals};
}

}  // namespace surfstate::quadrature
