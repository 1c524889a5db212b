// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/kernels/sturm.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace surfstate::kernels {

// Four shifts share one sweep over the matrix.  Only add/sub/mul/div/cmp
// intrinsics are used (no FMA), so every lane performs the identical IEEE
// operation sequence as sturm_count_scalar and the counts match bitwise.
void sturm_count_avx2(const double* diag, const double* offdiag_sq,
                      std::size_t n, double pivmin, const double* shifts,
                      std::int32_t* counts, std::size_t m) {
  const __m256d v_zero = _mm256_setzero_pd();
  const __m256d v_negpiv = _mm256_set1_pd(-pivmin);

  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    const __m256d sigma = _mm256_loadu_pd(shifts + j);
    __m256i count = _mm256_setzero_si256();

    __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), sigma);
    __m256d zero_mask = _mm256_cmp_pd(q, v_zero, _CMP_EQ_OQ);
    q = _mm256_blendv_pd(q, v_negpiv, zero_mask);
    __m256d neg = _mm256_cmp_pd(q, v_zero, _CMP_LT_OQ);
    count = _mm256_sub_epi64(count, _mm256_castpd_si256(neg));

    for (std::size_t i = 1; i < n; ++i) {
      const __m256d d = _mm256_set1_pd(diag[i]);
      const __m256d e2 = _mm256_set1_pd(offdiag_sq[i - 1]);
      q = _mm256_sub_pd(_mm256_sub_pd(d, sigma), _mm256_div_pd(e2, q));
      zero_mask = _mm256_cmp_pd(q, v_zero, _CMP_EQ_OQ);
      q = _mm256_blendv_pd(q, v_negpiv, zero_mask);
      neg = _mm256_cmp_pd(q, v_zero, _CMP_LT_OQ);
      count = _mm256_sub_epi64(count, _mm256_castpd_si256(neg));
    }

    alignas(32) std::int64_t lane[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane), count);
    for (int l = 0; l < 4; ++l)
      counts[j + l] = static_cast<std::int32_t>(lane[l]);
  }
  if (j < m)
    sturm_count_scalar(diag, offdiag_sq, n, pivmin, shifts + j, counts + j,
                       m - j);
}

}  // namespace surfstate::kernels

#endif  // x86_64
