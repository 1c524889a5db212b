// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstddef>

// Sturm-count kernels: for a symmetric tridiagonal matrix T the count at a
// shift sigma is the number of eigenvalues of T below sigma, obtained from
// the signs of the LDL^T pivots of T - sigma I.  The recurrence is serial in
// the matrix index but independent across shifts, so the batched variants
// run several shifts through one sweep of the matrix.  All variants perform
// the identical sequence of IEEE operations per shift; results are bitwise
// equal regardless of the selected kernel.

namespace surfstate::kernels {

// Counts eigenvalues < shifts[j] for j = 0..m-1.  offdiag_sq holds the
// squared off-diagonal entries (length n-1).  pivmin guards zero pivots.
using SturmBatchFn = void (*)(const double* diag, const double* offdiag_sq,
                              std::size_t n, double pivmin,
                              const double* shifts, std::int32_t* counts,
                              std::size_t m);

void sturm_count_scalar(const double* diag, const double* offdiag_sq,
                        std::size_t n, double pivmin, const double* shifts,
                        std::int32_t* counts, std::size_t m);

#if defined(__x86_64__) || defined(_M_X64)
// Four shifts per sweep in AVX2 lanes; tail handled by the scalar kernel.
void sturm_count_avx2(const double* diag, const double* offdiag_sq,
                      std::size_t n, double pivmin, const double* shifts,
                      std::int32_t* counts, std::size_t m);
#endif

enum class KernelKind : int { auto_detect = 0, scalar = 1, avx2 = 2 };

// Runtime selection: honors set_forced_kernel(), then the environment
// variable SURFSTATE_KERNEL (scalar|avx2), then CPU detection.
SturmBatchFn select_sturm_kernel();
const char* active_sturm_kernel_name();

// Test hook; pass auto_detect to restore detection.
void set_forced_kernel(KernelKind kind);

}  // namespace surfstate::kernels
