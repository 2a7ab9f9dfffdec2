// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

// NEON satisfaction kernel: four 32-bit interpretations per pass. NEON is
// baseline on aarch64, so no runtime feature check is needed.

#include "aspsc/kernel.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace aspsc::kernel {

namespace {

void satisfies_batch_neon(const std::uint32_t* cand, std::size_t n,
                          const RuleMask* rules, std::size_t n_rules,
                          std::uint8_t* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t m = vld1q_u32(cand + i);
    uint32x4_t alive = vdupq_n_u32(0xFFFFFFFFu);
    for (std::size_t r = 0; r < n_rules; ++r) {
      const uint32x4_t pos = vdupq_n_u32(rules[r].pos);
      const uint32x4_t neg = vdupq_n_u32(rules[r].neg);
      const uint32x4_t head = vdupq_n_u32(rules[r].head);
      const uint32x4_t body_pos_ok = vceqq_u32(vandq_u32(m, pos), pos);
      const uint32x4_t body_neg_ok = vceqq_u32(vandq_u32(m, neg), vdupq_n_u32(0));
      const uint32x4_t head_false = vceqq_u32(vandq_u32(m, head), vdupq_n_u32(0));
      const uint32x4_t violated = vandq_u32(vandq_u32(body_pos_ok, body_neg_ok), head_false);
      alive = vbicq_u32(alive, violated);
      if (vmaxvq_u32(alive) == 0) break;
    }
    out[i + 0] = static_cast<std::uint8_t>(vgetq_lane_u32(alive, 0) & 1);
    out[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u32(alive, 1) & 1);
    out[i + 2] = static_cast<std::uint8_t>(vgetq_lane_u32(alive, 2) & 1);
    out[i + 3] = static_cast<std::uint8_t>(vgetq_lane_u32(alive, 3) & 1);
  }
  for (; i < n; ++i) {
    out[i] = satisfies(cand[i], std::span<const RuleMask>(rules, n_rules)) ? 1 : 0;
  }
}

const Backend kNeon{"neon", &satisfies_batch_neon};

}  // namespace

const Backend* neon_backend() { return &kNeon; }

}  // namespace aspsc::kernel

#endif  // __aarch64__
