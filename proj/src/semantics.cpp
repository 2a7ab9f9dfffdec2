// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/semantics.hpp"

#include <algorithm>
#include <bit>

#include "enumerate.hpp"
#include "parallel.hpp"

namespace aspsc {

namespace {

// Interpretation scan blocks: fixed size so that parallel runs partition the
// domain identically for every worker count.
constexpr std::uint64_t kModelBlock = 4096;

void check_universe(const Interpretation& i, const Program& p) {
  if (i.universe_size != p.atoms.size()) {
    throw UniverseMismatch("interpretation over " + std::to_string(i.universe_size) +
                           " atoms used with a program over " +
                           std::to_string(p.atoms.size()));
  }
  if (i.universe_size < 32 && (i.bits >> i.universe_size) != 0) {
    throw UniverseMismatch("interpretation has bits outside its universe");
  }
}

std::uint32_t guarded_at_mask(const detail::MaskProgram& mp, std::uint32_t max_atoms) {
  const auto n = static_cast<std::uint32_t>(std::popcount(mp.at_mask));
  if (n > max_atoms) throw GuardExceeded(n, max_atoms);
  return mp.at_mask;
}

bool less_by_cardinality(const Interpretation& a, const Interpretation& b) {
  const int ca = std::popcount(a.bits), cb = std::popcount(b.bits);
  return ca != cb ? ca < cb : a.bits < b.bits;
}

}  // namespace

bool satisfies(const Interpretation& i, const Program& p) {
  check_universe(i, p);
  const detail::MaskProgram mp = detail::lower(p);
  return kernel::satisfies(i.bits, mp.rules);
}

Program reduct(const Program& p, const Interpretation& i) {
  check_universe(i, p);
  Program out;
  out.atoms = p.atoms;
  for (const Rule& r : p.rules) {
    bool blocked = false;
    for (AtomId a : r.neg_body) {
      if (i.contains(a)) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    out.rules.push_back(Rule{r.head, r.pos_body, {}});
  }
  return out;
}

bool is_answer_set(const Program& p, const Interpretation& m) {
  check_universe(m, p);
  const detail::MaskProgram mp = detail::lower(p);
  const auto& be = kernel::active_backend();
  if (!kernel::satisfies(m.bits, mp.rules)) return false;
  std::vector<kernel::RuleMask> red;
  detail::reduct_masks(mp.rules, m.bits, red);
  return !detail::has_proper_submodel(red, m.bits, 0, be);
}

AnswerSetReport answer_sets(const Program& p, const SolveOptions& opts) {
  const detail::MaskProgram mp = detail::lower(p);
  const std::uint32_t domain = guarded_at_mask(mp, opts.max_atoms);
  const auto& be = kernel::active_backend();

  const std::uint64_t total = 1ull << std::popcount(domain);
  const std::size_t n_blocks = static_cast<std::size_t>((total + kModelBlock - 1) / kModelBlock);
  std::vector<std::vector<std::uint32_t>> found(n_blocks);

  detail::for_each_block(n_blocks, opts.parallel, [&](std::size_t b) {
    std::vector<kernel::RuleMask> red;
    red.reserve(mp.rules.size());
    detail::scan_models(
        mp.rules, domain, 0, be,
        [&](std::uint32_t m) {
          detail::reduct_masks(mp.rules, m, red);
          if (!detail::has_proper_submodel(red, m, 0, be)) found[b].push_back(m);
          return true;
        },
        b * kModelBlock, kModelBlock);
    return true;
  });

  AnswerSetReport report;
  report.universe = p.atoms;
  report.enumerated = total;
  for (const auto& block : found) {
    for (std::uint32_t m : block) {
      report.answer_sets.push_back(Interpretation{m, p.atoms.size()});
    }
  }
  std::sort(report.answer_sets.begin(), report.answer_sets.end(), less_by_cardinality);
  return report;
}

bool query(const Program& p, std::string_view atom, QueryMode mode,
           const SolveOptions& opts) {
  const AnswerSetReport report = answer_sets(p, opts);
  const std::optional<AtomId> id = p.atoms.find(atom);
  auto holds_in = [&](const Interpretation& m) { return id && m.contains(*id); };
  if (mode == QueryMode::brave) {
    return std::any_of(report.answer_sets.begin(), report.answer_sets.end(), holds_in);
  }
  return std::all_of(report.answer_sets.begin(), report.answer_sets.end(), holds_in);
}

std::vector<std::string> interpretation_names(const Interpretation& i,
                                              const AtomTable& table) {
  std::vector<std::string> names;
  for (AtomId a = 0; a < i.universe_size; ++a) {
    if (i.contains(a)) names.push_back(table.name(a));
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace aspsc
