// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

// Internal enumeration helpers: programs lowered to rule masks, batched
// model scans over submask domains, and the minimality check. All scans
// feed fixed-size candidate batches to the active satisfaction kernel, so
// results are identical across backends and worker counts.

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "aspsc/errors.hpp"
#include "aspsc/kernel.hpp"
#include "aspsc/syntax.hpp"

namespace aspsc::detail {

inline constexpr std::size_t kScanBatch = 256;

/// A program lowered to 32-bit masks. Requires the atom table to fit the
/// bit-vector width.
struct MaskProgram {
  std::vector<kernel::RuleMask> rules;
  std::uint32_t at_mask = 0;       // union of all rule atoms = At(P)
  std::uint32_t table_size = 0;
};

inline std::uint32_t mask_of(const std::vector<AtomId>& ids) {
  std::uint32_t m = 0;
  for (AtomId id : ids) m |= 1u << id;
  return m;
}

inline MaskProgram lower(const Program& p) {
  if (p.atoms.size() > 32) {
    throw GuardExceeded(p.atoms.size(), 32);
  }
  MaskProgram mp;
  mp.table_size = p.atoms.size();
  mp.rules.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    kernel::RuleMask rm{mask_of(r.head), mask_of(r.pos_body), mask_of(r.neg_body)};
    mp.at_mask |= rm.head | rm.pos | rm.neg;
    mp.rules.push_back(rm);
  }
  return mp;
}

/// Reduct of `rules` w.r.t. m, appended to `out`: rules with neg & m != 0
/// are dropped, the rest keep head/pos with neg cleared.
inline void reduct_masks(const std::vector<kernel::RuleMask>& rules, std::uint32_t m,
                         std::vector<kernel::RuleMask>& out) {
  out.clear();
  for (const kernel::RuleMask& r : rules) {
    if ((r.neg & m) != 0) continue;
    out.push_back(kernel::RuleMask{r.head, r.pos, 0});
  }
}

/// Scans the interpretations { required | s : s submask of free } in
/// ascending numeric order, invoking on_model(value) for each one that
/// satisfies `rules`. on_model returns false to stop the scan early.
/// Returns false iff the scan was stopped.
template <typename OnModel>
bool scan_models(const std::vector<kernel::RuleMask>& rules, std::uint32_t free,
                 std::uint32_t required, const kernel::Backend& be, OnModel&& on_model,
                 std::uint64_t start_index = 0, std::uint64_t count = ~0ull) {
  const std::uint64_t total = 1ull << std::popcount(free);
  std::uint64_t index = start_index < total ? start_index : total;
  std::uint64_t remaining = total - index;
  if (count < remaining) remaining = count;

  std::uint32_t cand[kScanBatch];
  std::uint8_t sat[kScanBatch];
  std::uint32_t s = kernel::expand_subset(index, free);
  while (remaining > 0) {
    const std::size_t n =
        remaining < kScanBatch ? static_cast<std::size_t>(remaining) : kScanBatch;
    for (std::size_t i = 0; i < n; ++i) {
      cand[i] = required | s;
      s = kernel::next_subset(s, free);
    }
    be.satisfies_batch(cand, n, rules.data(), rules.size(), sat);
    for (std::size_t i = 0; i < n; ++i) {
      if (sat[i] && !on_model(cand[i])) return false;
    }
    remaining -= n;
  }
  return true;
}

/// True iff some N with required <= N < m (strict subset of m) satisfies
/// `rules`. With `rules` the reduct of P w.r.t. m and `required` the added
/// fact set, this is exactly the answer-set countermodel test.
inline bool has_proper_submodel(const std::vector<kernel::RuleMask>& rules,
                                std::uint32_t m, std::uint32_t required,
                                const kernel::Backend& be) {
  const std::uint32_t free = m & ~required;
  const std::uint64_t strict_count = (1ull << std::popcount(free)) - 1;  // skip N == m
  bool found = false;
  scan_models(
      rules, free, required, be,
      [&](std::uint32_t) {
        found = true;
        return false;
      },
      0, strict_count);
  return found;
}

/// First answer set of P + F (facts as a mask) in ascending numeric order,
/// or nullopt. `mp` is the lowered program without the fact rules; models
/// are scanned over { F | s : s submask of domain & ~F }.
inline std::optional<std::uint32_t> first_answer_set(const MaskProgram& mp,
                                                     std::uint32_t fact_mask,
                                                     std::uint32_t domain,
                                                     const kernel::Backend& be) {
  std::optional<std::uint32_t> result;
  std::vector<kernel::RuleMask> reduct;
  reduct.reserve(mp.rules.size());
  scan_models(mp.rules, domain & ~fact_mask, fact_mask, be, [&](std::uint32_t m) {
    reduct_masks(mp.rules, m, reduct);
    if (!has_proper_submodel(reduct, m, fact_mask, be)) {
      result = m;
      return false;
    }
    return true;
  });
  return result;
}

/// All fact sets F subseteq domain in ascending (cardinality, numeric)
/// order. Enumeration works on packed k-bit combinations (Gosper's hack)
/// expanded onto the set bits of domain.
inline std::vector<std::uint32_t> fact_sets_in_canonical_order(std::uint32_t domain) {
  const int n = std::popcount(domain);
  std::vector<std::uint32_t> out;
  out.reserve(1ull << n);
  out.push_back(0);
  for (int k = 1; k <= n; ++k) {
    std::uint64_t v = (1ull << k) - 1;
    while (v < (1ull << n)) {
      out.push_back(kernel::expand_subset(v, domain));
      const std::uint64_t c = v & (~v + 1);
      const std::uint64_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }
  return out;
}

}  // namespace aspsc::detail
