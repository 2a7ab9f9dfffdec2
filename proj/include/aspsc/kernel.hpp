// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aspsc::kernel {

/// One ground rule lowered to bit masks over atom ids 0..31.
///
/// An interpretation m (one bit per atom) violates the rule iff the body is
/// true and no head atom holds:
///   (m & pos) == pos  &&  (m & neg) == 0  &&  (m & head) == 0.
struct RuleMask {
  std::uint32_t head = 0;
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

inline bool violates(std::uint32_t m, const RuleMask& r) {
  return (m & r.pos) == r.pos && (m & r.neg) == 0 && (m & r.head) == 0;
}

/// Reference satisfaction check: true iff m satisfies every rule.
inline bool satisfies(std::uint32_t m, std::span<const RuleMask> rules) {
  for (const RuleMask& r : rules) {
    if (violates(m, r)) return false;
  }
  return true;
}

/// A satisfaction kernel. `satisfies_batch` writes out[i] = 1 if cand[i]
/// satisfies every rule, else 0.  All backends compute the identical
/// function; they differ only in lane width.
struct Backend {
  const char* name;
  void (*satisfies_batch)(const std::uint32_t* cand, std::size_t n,
                          const RuleMask* rules, std::size_t n_rules,
                          std::uint8_t* out);
};

/// Portable scalar backend (always available).
const Backend& scalar_backend();

/// Backends compiled in and usable on this machine, scalar first.
std::span<const Backend* const> available_backends();

/// The backend selected at startup: the widest usable one, unless the
/// environment variable ASPSC_KERNEL names another ("scalar", "avx2", "neon").
const Backend& active_backend();

/// Scatters the low bits of `packed` into the set-bit positions of `mask`
/// (lowest mask bit first).  Strictly monotone in `packed`, so ascending
/// packed values enumerate the submasks of `mask` in ascending numeric order.
inline std::uint32_t expand_subset(std::uint64_t packed, std::uint32_t mask) {
  std::uint32_t out = 0;
  while (mask != 0) {
    std::uint32_t low = mask & (~mask + 1);
    if (packed & 1) out |= low;
    packed >>= 1;
    mask ^= low;
  }
  return out;
}

/// Successor of submask `s` of `mask` in ascending numeric order
/// (wraps to 0 after `mask`).
inline std::uint32_t next_subset(std::uint32_t s, std::uint32_t mask) {
  return (s - mask) & mask;
}

}  // namespace aspsc::kernel
