// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/supercoherence.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "enumerate.hpp"
#include "parallel.hpp"

namespace aspsc {

namespace {

// Fact sets handled per parallel block; fixed so that witness selection is
// identical for every worker count.
constexpr std::size_t kFactBlock = 64;

std::uint32_t sc_domain(const detail::MaskProgram& mp, std::uint32_t max_atoms) {
  const auto n = static_cast<std::uint32_t>(std::popcount(mp.at_mask));
  if (n > max_atoms) throw GuardExceeded(n, max_atoms);
  return mp.at_mask;
}

/// Runs check(F) over all fact sets F subseteq domain in (cardinality,
/// numeric) order and returns the rank (0-based) of the first F for which
/// check returns false, or nullopt. `facts` receives the canonical order.
template <typename Check>
std::optional<std::size_t> first_failing_fact_set(const std::vector<std::uint32_t>& facts,
                                                  unsigned parallel, Check&& check) {
  const std::size_t n_blocks = (facts.size() + kFactBlock - 1) / kFactBlock;
  std::vector<std::vector<std::uint8_t>> failed(n_blocks);
  detail::for_each_block(n_blocks, parallel, [&](std::size_t b) {
    const std::size_t begin = b * kFactBlock;
    const std::size_t end = std::min(begin + kFactBlock, facts.size());
    auto& slot = failed[b];
    slot.resize(end - begin, 0);
    bool any_failed = false;
    for (std::size_t i = begin; i < end; ++i) {
      if (!check(facts[i])) {
        slot[i - begin] = 1;
        any_failed = true;
        // keep scanning the block: the block's first failure is decided
        // below, later blocks are cancelled by the return value
      }
    }
    return !any_failed;
  });
  for (std::size_t b = 0; b < n_blocks; ++b) {
    for (std::size_t i = 0; i < failed[b].size(); ++i) {
      if (failed[b][i]) return b * kFactBlock + i;
    }
  }
  return std::nullopt;
}

}  // namespace

bool exists_coherent_extension(const Program& p, const SolveOptions& opts) {
  const detail::MaskProgram mp = detail::lower(p);
  const auto n = static_cast<std::uint32_t>(std::popcount(mp.at_mask));
  if (n > opts.max_atoms) throw GuardExceeded(n, opts.max_atoms);
  // AS(P + F) is nonempty for some F iff P has a classical model: a model M
  // of P makes M an answer set of P + M.
  bool has_model = false;
  detail::scan_models(mp.rules, mp.at_mask, 0, kernel::active_backend(),
                      [&](std::uint32_t) {
                        has_model = true;
                        return false;
                      });
  return has_model;
}

ScVerdict is_super_coherent(const Program& p, const ScOptions& opts) {
  const detail::MaskProgram mp = detail::lower(p);
  const std::uint32_t domain = sc_domain(mp, opts.max_atoms);
  const auto& be = kernel::active_backend();

  const std::vector<std::uint32_t> facts = detail::fact_sets_in_canonical_order(domain);
  const auto witness_rank = first_failing_fact_set(
      facts, opts.parallel, [&](std::uint32_t fact_mask) {
        return detail::first_answer_set(mp, fact_mask, domain, be).has_value();
      });

  ScVerdict verdict;
  verdict.universe = p.atoms;
  if (witness_rank) {
    verdict.holds = false;
    verdict.witness = Interpretation{facts[*witness_rank], p.atoms.size()};
    verdict.facts_checked = *witness_rank + 1;
  } else {
    verdict.holds = true;
    verdict.facts_checked = facts.size();
  }
  return verdict;
}

namespace {

Program remap_into(const Program& p, AtomTable& table) {
  Program out;
  std::vector<AtomId> to_merged(p.atoms.size());
  for (AtomId a = 0; a < p.atoms.size(); ++a) to_merged[a] = table.intern(p.atoms.name(a));
  out.rules.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    Rule nr;
    for (AtomId a : r.head) nr.head.push_back(to_merged[a]);
    for (AtomId a : r.pos_body) nr.pos_body.push_back(to_merged[a]);
    for (AtomId a : r.neg_body) nr.neg_body.push_back(to_merged[a]);
    normalize_rule(nr);
    out.rules.push_back(std::move(nr));
  }
  out.atoms = table;
  return out;
}

}  // namespace

EquivVerdict projected_uniform_equiv(const Program& p, const Program& q,
                                     const std::vector<std::string>& context,
                                     const std::vector<std::string>& projection,
                                     const ScOptions& opts) {
  AtomTable merged;
  Program mp = remap_into(p, merged);
  Program mq = remap_into(q, merged);
  std::uint32_t context_mask = 0, projection_mask = 0;
  for (const auto& name : context) context_mask |= 1u << merged.intern(name);
  for (const auto& name : projection) projection_mask |= 1u << merged.intern(name);
  mp.atoms = merged;
  mq.atoms = merged;
  if (merged.size() > 32) throw GuardExceeded(merged.size(), 32);

  const auto n_context = static_cast<std::uint32_t>(std::popcount(context_mask));
  if (n_context > opts.max_atoms) throw GuardExceeded(n_context, opts.max_atoms);

  const detail::MaskProgram lp = detail::lower(mp);
  const detail::MaskProgram lq = detail::lower(mq);
  const auto& be = kernel::active_backend();

  // Projected answer-set family of (rules + F) as a sorted mask set.
  auto family = [&](const detail::MaskProgram& prog, std::uint32_t fact_mask) {
    std::vector<std::uint32_t> proj;
    std::vector<kernel::RuleMask> red;
    detail::scan_models(prog.rules, (prog.at_mask | fact_mask) & ~fact_mask, fact_mask,
                        be, [&](std::uint32_t m) {
                          detail::reduct_masks(prog.rules, m, red);
                          if (!detail::has_proper_submodel(red, m, fact_mask, be)) {
                            proj.push_back(m & projection_mask);
                          }
                          return true;
                        });
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    return proj;
  };

  const std::vector<std::uint32_t> facts =
      detail::fact_sets_in_canonical_order(context_mask);
  const auto witness_rank =
      first_failing_fact_set(facts, opts.parallel, [&](std::uint32_t fact_mask) {
        return family(lp, fact_mask) == family(lq, fact_mask);
      });

  EquivVerdict verdict;
  verdict.universe = merged;
  verdict.context = context;
  verdict.projection = projection;
  std::sort(verdict.context.begin(), verdict.context.end());
  std::sort(verdict.projection.begin(), verdict.projection.end());
  if (witness_rank) {
    const std::uint32_t w = facts[*witness_rank];
    verdict.holds = false;
    verdict.witness = Interpretation{w, merged.size()};
    verdict.facts_checked = *witness_rank + 1;
    auto to_names = [&](const std::vector<std::uint32_t>& masks) {
      ProjectionFamily fam;
      for (std::uint32_t m : masks) {
        fam.push_back(interpretation_names(Interpretation{m, merged.size()}, merged));
      }
      return fam;
    };
    verdict.lhs_projection = to_names(family(lp, w));
    verdict.rhs_projection = to_names(family(lq, w));
  } else {
    verdict.holds = true;
    verdict.facts_checked = facts.size();
  }
  return verdict;
}

}  // namespace aspsc
