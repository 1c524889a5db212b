// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "surfstate/kernels/sturm.hpp"

namespace surfstate::oracle {

namespace {

// The matrix stores H/(4 E0); eigenvalues are scaled back on return.
constexpr double kUnitFactor = 4.0;
constexpr double kBisectAbsTol = 1e-12 / kUnitFactor;

double pivmin_for(const GridProblem& p) {
  const double e2 = p.offdiag.empty() ? 1.0
                                      : p.offdiag[0] * p.offdiag[0];
  return std::numeric_limits<double>::min() * std::max(1.0, e2);
}

struct CountContext {
  std::vector<double> offdiag_sq;
  double pivmin;
  kernels::SturmBatchFn kernel;

  explicit CountContext(const GridProblem& p)
      : offdiag_sq(p.offdiag.size()),
        pivmin(pivmin_for(p)),
        kernel(kernels::select_sturm_kernel()) {
    for (std::size_t i = 0; i < p.offdiag.size(); ++i)
      offdiag_sq[i] = p.offdiag[i] * p.offdiag[i];
  }

  void count(const GridProblem& p, const double* shifts, std::int32_t* out,
             std::size_t m) const {
    kernel(p.diag.data(), offdiag_sq.data(), p.diag.size(), pivmin, shifts,
           out, m);
  }
};

}  // namespace

GridProblem build_grid(const spectrum::DefectParams& params, double L_x0,
                       int n_points) {
  if (n_points < 500 || n_points % 2 != 0)
    throw ConfigError("whole-axis grid needs an even n_points >= 500, got " +
                      std::to_string(n_points));
  if (!(L_x0 >= 40.0))
    throw ConfigError("whole-axis grid needs L >= 40 x0, got " +
                      std::to_string(L_x0));
  GridProblem p{};
  p.kind = GridKind::whole_axis;
  p.half_width_x0 = L_x0;
  p.n_points = n_points;
  p.lambda = params.lambda();
  p.h_x0 = 2.0 * L_x0 / n_points;
  p.diag.resize(n_points);
  p.offdiag.assign(n_points - 1, -1.0 / (p.h_x0 * p.h_x0));
  const double kin = 2.0 / (p.h_x0 * p.h_x0);
  for (int j = 0; j < n_points; ++j) {
    const double u = (j + 0.5) * p.h_x0 - L_x0;
    p.diag[j] = kin - 1.0 / u;
  }
  // contact term: weight lambda over the cell straddling u = 0, half on
  // each adjacent node
  p.diag[n_points / 2 - 1] += p.lambda / (2.0 * p.h_x0);
  p.diag[n_points / 2] += p.lambda / (2.0 * p.h_x0);
  return p;
}

GridProblem build_wall_grid(double L_x0, int n_points) {
  if (n_points < 500)
    throw ConfigError("wall grid needs n_points >= 500");
  if (!(L_x0 >= 40.0))
    throw ConfigError("wall grid needs L >= 40 x0");
  GridProblem p{};
  p.kind = GridKind::half_line_wall;
  p.half_width_x0 = L_x0;
  p.n_points = n_points;
  p.lambda = 0.0;
  p.h_x0 = L_x0 / (n_points + 1);
  p.diag.resize(n_points);
  p.offdiag.assign(n_points - 1, -1.0 / (p.h_x0 * p.h_x0));
  const double kin = 2.0 / (p.h_x0 * p.h_x0);
  for (int j = 0; j < n_points; ++j) {
    const double u = (j + 1) * p.h_x0;
    p.diag[j] = kin - 1.0 / u;
  }
  return p;
}

GridProblem build_grid_with_potential(const std::function<double(double)>& v,
                                      double L_x0, int n_points) {
  if (n_points < 500 || n_points % 2 != 0)
    throw ConfigError("custom grid needs an even n_points >= 500");
  GridProblem p{};
  p.kind = GridKind::whole_axis;
  p.half_width_x0 = L_x0;
  p.n_points = n_points;
  p.lambda = 0.0;
  p.h_x0 = 2.0 * L_x0 / n_points;
  p.diag.resize(n_points);
  p.offdiag.assign(n_points - 1, -1.0 / (p.h_x0 * p.h_x0));
  const double kin = 2.0 / (p.h_x0 * p.h_x0);
  for (int j = 0; j < n_points; ++j) {
    const double u = (j + 0.5) * p.h_x0 - L_x0;
    p.diag[j] = kin + v(u);
  }
  return p;
}

int count_below(const GridProblem& problem, double energy_e0) {
  CountContext ctx(problem);
  const double shift = energy_e0 / kUnitFactor;
  std::int32_t c = 0;
  ctx.count(problem, &shift, &c, 1);
  return c;
}

OracleSpectrum lowest_eigenvalues(const GridProblem& problem, int k) {
  if (k < 1 || k > 10)
    throw ConfigError("k must lie in [1, 10], got " + std::to_string(k));
  const std::size_t n = problem.diag.size();
  if (n < 2) throw ConfigError("grid too small");

  CountContext ctx(problem);

  // Gershgorin bounds bracket the whole spectrum.
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    const double left = (i > 0) ? std::abs(problem.offdiag[i - 1]) : 0.0;
    const double right = (i + 1 < n) ? std::abs(problem.offdiag[i]) : 0.0;
    lo = std::min(lo, problem.diag[i] - left - right);
    hi = std::max(hi, problem.diag[i] + left + right);
  }

  {
    const double probes[2] = {lo, hi};
    std::int32_t c[2];
    ctx.count(problem, probes, c, 2);
    if (c[0] != 0 || c[1] < k)
      throw ConvergenceError(
          "Sturm bisection cannot bracket the requested eigenvalues "
          "(count(lo) = " + std::to_string(c[0]) + ", count(hi) = " +
          std::to_string(c[1]) + "); matrix build bug");
  }

  std::vector<double> los(k, lo), his(k, hi);
  std::vector<int> active;
  std::vector<double> mids;
  std::vector<std::int32_t> counts;

  for (int iter = 0; iter < 200; ++iter) {
    active.clear();
    mids.clear();
    for (int j = 0; j < k; ++j) {
      const double width = his[j] - los[j];
      const double scale =
          std::max(std::abs(los[j]), std::abs(his[j]));
      if (width > kBisectAbsTol + 4.0 * scale *
                      std::numeric_limits<double>::epsilon()) {
        active.push_back(j);
        mids.push_back(0.5 * (los[j] + his[j]));
      }
    }
    if (active.empty()) break;
    counts.resize(active.size());
    ctx.count(problem, mids.data(), counts.data(), active.size());
    for (std::size_t idx = 0; idx < active.size(); ++idx) {
      const int j = active[idx];
      if (counts[idx] > j)
        his[j] = mids[idx];
      else
        los[j] = mids[idx];
    }
  }

  OracleSpectrum out{};
  out.half_width_x0 = problem.half_width_x0;
  out.grid_sizes = {problem.n_points};
  out.richardson_extrapolated = false;
  out.eigenvalues_e0.resize(k);
  for (int j = 0; j < k; ++j)
    out.eigenvalues_e0[j] = kUnitFactor * 0.5 * (los[j] + his[j]);
  return out;
}

OracleSpectrum refine_and_extrapolate(
    const std::function<GridProblem(int)>& rebuild, int base_n_points, int k,
    int levels) {
  if (levels != 2 && levels != 3)
    throw ConfigError("richardson levels must be 2 or 3");

  // levels = 2 solves {n, 2n} and adds an n/2 grid so the error order can
  // still be measured; levels = 3 measures it on {n, 2n, 4n} directly.
  std::vector<int> sizes;
  if (levels == 2)
    sizes = {base_n_points / 2, base_n_points, 2 * base_n_points};
  else
    sizes = {base_n_points, 2 * base_n_points, 4 * base_n_points};

  std::vector<OracleSpectrum> solved;
  solved.reserve(sizes.size());
  for (int n : sizes) {
    GridProblem p = rebuild(n);
    solved.push_back(lowest_eigenvalues(p, k));
  }

  OracleSpectrum out{};
  out.half_width_x0 = solved.back().half_width_x0;
  out.grid_sizes = sizes;
  out.richardson_extrapolated = true;
  out.eigenvalues_e0.resize(k);
  out.measured_order.resize(k);
  for (int j = 0; j < k; ++j) {
    const double e_c = solved[0].eigenvalues_e0[j];
    const double e_m = solved[1].eigenvalues_e0[j];
    const double e_f = solved[2].eigenvalues_e0[j];
    double p_meas = 2.0;
    const double d1 = e_c - e_m;
    const double d2 = e_m - e_f;
    if (d2 != 0.0 && d1 / d2 > 1.0) p_meas = std::log2(d1 / d2);
    p_meas = std::clamp(p_meas, 0.5, 4.0);
    out.measured_order[j] = p_meas;
    out.eigenvalues_e0[j] =
        e_f + (e_f - e_m) / (std::exp2(p_meas) - 1.0);
  }
  return out;
}

OracleSpectrum refine_and_extrapolate(const spectrum::DefectParams& params,
                                      double L_x0, int base_n_points, int k,
                                      int levels) {
  return refine_and_extrapolate(
      [&params, L_x0](int n) { return build_grid(params, L_x0, n); },
      base_n_points, k, levels);
}

}  // namespace surfstate::oracle
