// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 satisfaction kernel: eight 32-bit interpretations per pass. This
// translation unit is compiled with -mavx2; callers reach it only through
// the dispatch table after a cpuid check.

#include "aspsc/kernel.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace aspsc::kernel {

namespace {

#if defined(__AVX2__)

void satisfies_batch_avx2(const std::uint32_t* cand, std::size_t n,
                          const RuleMask* rules, std::size_t n_rules,
                          std::uint8_t* out) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cand + i));
    __m256i alive = _mm256_cmpeq_epi32(zero, zero);  // all ones
    for (std::size_t r = 0; r < n_rules; ++r) {
      const __m256i pos = _mm256_set1_epi32(static_cast<int>(rules[r].pos));
      const __m256i neg = _mm256_set1_epi32(static_cast<int>(rules[r].neg));
      const __m256i head = _mm256_set1_epi32(static_cast<int>(rules[r].head));
      const __m256i body_pos_ok = _mm256_cmpeq_epi32(_mm256_and_si256(m, pos), pos);
      const __m256i body_neg_ok = _mm256_cmpeq_epi32(_mm256_and_si256(m, neg), zero);
      const __m256i head_false = _mm256_cmpeq_epi32(_mm256_and_si256(m, head), zero);
      const __m256i violated =
          _mm256_and_si256(_mm256_and_si256(body_pos_ok, body_neg_ok), head_false);
      alive = _mm256_andnot_si256(violated, alive);
      if (_mm256_testz_si256(alive, alive)) break;
    }
    const int lanes = _mm256_movemask_ps(_mm256_castsi256_ps(alive));
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<std::uint8_t>((lanes >> k) & 1);
  }
  // tail
  for (; i < n; ++i) {
    out[i] = satisfies(cand[i], std::span<const RuleMask>(rules, n_rules)) ? 1 : 0;
  }
}

const Backend kAvx2{"avx2", &satisfies_batch_avx2};

#endif  // __AVX2__

}  // namespace

const Backend* avx2_backend_if_supported() {
#if defined(__AVX2__) && defined(__GNUC__)
  if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
  return nullptr;
}

}  // namespace aspsc::kernel

#endif  // x86_64
