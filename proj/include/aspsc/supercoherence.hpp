// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aspsc/semantics.hpp"
#include "aspsc/syntax.hpp"

namespace aspsc {

struct ScOptions {
  std::uint32_t max_atoms = kDefaultScGuard;
  unsigned parallel = 1;
};

/// Outcome of a super-coherence check. When refuted, `witness` is the fact
/// set F with AS(p + F) empty that comes first in (cardinality, numeric)
/// order, and `facts_checked` is its 1-based rank in that order; when the
/// property holds, facts_checked is 2^|At(p)|.
struct ScVerdict {
  bool holds = false;
  std::optional<Interpretation> witness;
  std::uint64_t facts_checked = 0;
  AtomTable universe;
};

/// One projected answer-set family: a sorted set of sorted atom-name sets.
using ProjectionFamily = std::vector<std::vector<std::string>>;

struct EquivVerdict {
  bool holds = false;
  std::optional<Interpretation> witness;  // over the merged table
  std::optional<ProjectionFamily> lhs_projection;
  std::optional<ProjectionFamily> rhs_projection;
  std::uint64_t facts_checked = 0;
  AtomTable universe;  // merged table
  std::vector<std::string> context;
  std::vector<std::string> projection;
};

/// True iff some fact set F makes p coherent, decided via classical model
/// existence over At(p).
bool exists_coherent_extension(const Program& p, const SolveOptions& opts = {});

/// Decides whether AS(p + F) is nonempty for every fact set F; restricting
/// F to subsets of At(p) is sound and complete.
ScVerdict is_super_coherent(const Program& p, const ScOptions& opts = {});

/// Uniform equivalence with projection: for every F subseteq context, the
/// B-projected answer-set families of p + F and q + F coincide. Atom sets
/// are given by name; the universes of p, q, context and projection are
/// merged first.
EquivVerdict projected_uniform_equiv(const Program& p, const Program& q,
                                     const std::vector<std::string>& context,
                                     const std::vector<std::string>& projection,
                                     const ScOptions& opts = {});

}  // namespace aspsc
