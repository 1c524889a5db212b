// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "surfstate/spectrum.hpp"

// Independent numerical ground truth: finite-difference Hamiltonian for the
// whole-axis image potential plus the contact term, eigenvalues by
// Sturm-sequence bisection.  No special function enters anywhere here.
//
// Internal units: x in x0, the matrix stores H/(4 E0) = -d2/du2 - 1/u
// + lambda delta(u); reported eigenvalues are multiplied by 4 (units of E0).

namespace surfstate::oracle {

enum class GridKind : std::uint8_t {
  whole_axis,      // [-L, L], offset nodes, contact term in the center cell
  half_line_wall,  // (0, L], node grid, Dirichlet wall at 0, no contact term
};

struct GridProblem {
  GridKind kind;
  double half_width_x0;    // L (for half_line_wall: domain length)
  int n_points;
  double lambda;
  std::vector<double> diag;
  std::vector<double> offdiag;  // all entries -1/h^2 < 0
  double h_x0;             // grid spacing
};

// Offset-uniform grid u_j = (j + 1/2) h - L, so u = 0 lies between two nodes
// and the 1/u singularity is never sampled.  The delta term of weight lambda
// is spread over the cell straddling 0, half on each adjacent node.
// Requires n_points even and >= 500, L >= 40 (ConfigError otherwise).
GridProblem build_grid(const spectrum::DefectParams& params, double L_x0,
                       int n_points);

// Hard wall at u = 0, binding side only: nodes u_j = j h, Dirichlet both
// ends.  The lambda -> infinity / delta -> 0 reference case.
GridProblem build_wall_grid(double L_x0, int n_points);

// Whole-axis grid over an arbitrary potential v(u) with no contact term;
// used by the convergence-order tests with smooth potentials.
GridProblem build_grid_with_potential(const std::function<double(double)>& v,
                                      double L_x0, int n_points);

struct OracleSpectrum {
  std::vector<double> eigenvalues_e0;  // sorted ascending
  double half_width_x0;
  std::vector<int> grid_sizes;         // grids that entered the result
  std::vector<double> measured_order;  // per eigenvalue; empty if raw
  bool richardson_extrapolated;
};

// k smallest eigenvalues (1 <= k <= 10) by Sturm bisection to 1e-12 absolute
// in E0 units.  Deterministic for fixed inputs regardless of kernel.
OracleSpectrum lowest_eigenvalues(const GridProblem& problem, int k);

// Number of eigenvalues below energy_e0 (Sturm count; consistency checks).
int count_below(const GridProblem& problem, double energy_e0);

// Re-solves on doubled grids and Richardson-extrapolates with the leading
// error order measured empirically per eigenvalue (the contact cell and the
// 1/u kink degrade the nominal order 2).  levels = 2 uses grids {n, 2n} plus
// an auxiliary n/2 grid for the order measurement; levels = 3 uses
// {n, 2n, 4n}.  The rebuild callback reconstructs the problem at a given
// grid size.
OracleSpectrum refine_and_extrapolate(
    const std::function<GridProblem(int)>& rebuild, int base_n_points, int k,
    int levels);

// Convenience overload for the standard whole-axis problem.
OracleSpectrum refine_and_extrapolate(const spectrum::DefectParams& params,
                                      double L_x0, int base_n_points, int k,
                                      int levels);

}  // namespace surfstate::oracle
