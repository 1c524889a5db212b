// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/kernels/sturm.hpp"

namespace surfstate::kernels {

// Reference kernel.  Keep the operation order in sync with the SIMD
// variants: pivot, zero-pivot fixup, then the sign test.  The variants are
// required to be bitwise-identical to this.
void sturm_count_scalar(const double* diag, const double* offdiag_sq,
                        std::size_t n, double pivmin, const double* shifts,
                        std::int32_t* counts, std::size_t m) {
  for (std::size_t j = 0; j < m; ++j) {
    const double sigma = shifts[j];
    std::int32_t count = 0;
    double q = diag[0] - sigma;
    if (q == 0.0) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
      q = (diag[i] - sigma) - offdiag_sq[i - 1] / q;
      if (q == 0.0) q = -pivmin;
      if (q < 0.0) ++count;
    }
    counts[j] = count;
  }
}

}  // namespace surfstate::kernels
