// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/kernel.hpp"

#include <cstdlib>
#include <string_view>

namespace aspsc::kernel {

namespace {

void satisfies_batch_scalar(const std::uint32_t* cand, std::size_t n,
                            const RuleMask* rules, std::size_t n_rules,
                            std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t m = cand[i];
    std::uint8_t ok = 1;
    for (std::size_t r = 0; r < n_rules; ++r) {
      if (violates(m, rules[r])) {
        ok = 0;
        break;
      }
    }
    out[i] = ok;
  }
}

const Backend kScalar{"scalar", &satisfies_batch_scalar};

}  // namespace

const Backend& scalar_backend() { return kScalar; }

#if defined(__x86_64__) || defined(_M_X64)
// defined in kernel_avx2.cpp; null when the CPU lacks AVX2
const Backend* avx2_backend_if_supported();
#endif
#if defined(__aarch64__)
const Backend* neon_backend();
#endif

namespace {

std::vector<const Backend*> enumerate_backends() {
  std::vector<const Backend*> list{&kScalar};
#if defined(__x86_64__) || defined(_M_X64)
  if (const Backend* b = avx2_backend_if_supported()) list.push_back(b);
#endif
#if defined(__aarch64__)
  if (const Backend* b = neon_backend()) list.push_back(b);
#endif
  return list;
}

const std::vector<const Backend*>& backend_list() {
  static const std::vector<const Backend*> list = enumerate_backends();
  return list;
}

const Backend* pick_active() {
  const auto& list = backend_list();
  if (const char* env = std::getenv("ASPSC_KERNEL")) {
    std::string_view want(env);
    for (const Backend* b : list) {
      if (want == b->name) return b;
    }
    // Unknown or unsupported name: fall through to the default choice.
  }
  return list.back();  // widest usable backend
}

}  // namespace

std::span<const Backend* const> available_backends() {
  const auto& list = backend_list();
  return {list.data(), list.size()};
}

const Backend& active_backend() {
  static const Backend* active = pick_active();
  return *active;
}

}  // namespace aspsc::kernel
