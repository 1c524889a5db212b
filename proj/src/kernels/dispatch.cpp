// Copyright (C) 2026 The surfstate authors
// SPDX-License-Identifier: Apache-2.0

#include "surfstate/kernels/sturm.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace surfstate::kernels {

namespace {

std::atomic<int> g_forced{static_cast<int>(KernelKind::auto_detect)};

bool avx2_available() {
#if (defined(__x86_64__) || defined(_M_X64)) && \
    (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

KernelKind env_request() {
  const char* env = std::getenv("SURFSTATE_KERNEL");
  if (env == nullptr) return KernelKind::auto_detect;
  if (std::strcmp(env, "scalar") == 0) return KernelKind::scalar;
  if (std::strcmp(env, "avx2") == 0) return KernelKind::avx2;
  return KernelKind::auto_detect;
}

KernelKind resolve() {
  KernelKind kind = static_cast<KernelKind>(g_forced.load());
  if (kind == KernelKind::auto_detect) kind = env_request();
  if (kind == KernelKind::avx2 && !avx2_available()) kind = KernelKind::scalar;
  if (kind == KernelKind::auto_detect)
    kind = avx2_available() ? KernelKind::avx2 : KernelKind::scalar;
  return kind;
}

}  // namespace

void set_forced_kernel(KernelKind kind) {
  g_forced.store(static_cast<int>(kind));
}

SturmBatchFn select_sturm_kernel() {
#if defined(__x86_64__) || defined(_M_X64)
  if (resolve() == KernelKind::avx2) return &sturm_count_avx2;
#endif
  return &sturm_count_scalar;
}

const char* active_sturm_kernel_name() {
#if defined(__x86_64__) || defined(_M_X64)
  if (resolve() == KernelKind::avx2) return "avx2";
#endif
  return "scalar";
}

}  // namespace surfstate::kernels
