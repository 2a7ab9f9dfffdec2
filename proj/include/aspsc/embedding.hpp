// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aspsc/semantics.hpp"
#include "aspsc/syntax.hpp"

namespace aspsc {

/// Result of a super-coherence-preserving embedding. `original_universe`
/// holds the ids (within program.atoms) of the untransformed vocabulary the
/// answer sets are recovered over.
struct EmbeddingArtifact {
  Program program;
  std::vector<AtomId> original_universe;
  std::optional<AtomId> fail_atom;  // absent for the bare shift transform
  std::optional<AtomId> query_atom;
  std::string transform;  // "strat" | "shift" | "strat_shift"
  std::vector<std::string> warnings;
};

struct StratOptions {
  /// Extra atom names to include in the transformed vocabulary (each gets
  /// its own guess/check scaffold); needed when facts over atoms outside
  /// the program will be added later.
  std::vector<std::string> extra_universe;
  /// When false, a program with constraints is rejected instead of being
  /// constraint-eliminated first.
  bool auto_eliminate_constraints = true;
};

/// Replaces negative literals by fresh complement atoms `_f_<a>` and adds,
/// per universe atom a, the scaffold
///   `_t_<a> | _f_<a>.`   `_t_<a> :- a.`   `_fail :- _t_<a>, not a.`
/// The result is stratified and super-coherent.
EmbeddingArtifact strat_transform(const Program& p, const StratOptions& opts = {});

struct ShiftResult {
  Program program;
  /// The answer-set preservation guarantee only covers head-cycle-free
  /// inputs; false means the transform was applied anyway.
  bool input_head_cycle_free = true;
};

/// Head shifting: every rule with n head atoms becomes n normal rules, the
/// remaining head atoms moving to the negative body. Constraints are copied.
ShiftResult shift_transform(const Program& p);

/// strat followed by shift; the disjunctive scaffold rule becomes the pair
/// `_t_<a> :- not _f_<a>.` / `_f_<a> :- not _t_<a>.`  Requires a normal
/// input program.
EmbeddingArtifact strat_shift(const Program& p, const StratOptions& opts = {});

/// AS(p) recovered from the transformed program: answer sets without the
/// fail atom, projected to the original universe, deduplicated, in
/// ascending (cardinality, bits) order. Interpretations are over
/// art.program.atoms.
std::vector<Interpretation> recover_answer_sets(const EmbeddingArtifact& art,
                                                const SolveOptions& opts = {});

/// Coherence embedding: AS(p) is empty iff `_fail` is cautiously true for
/// the result.
EmbeddingArtifact embed_coherence(const Program& p);

/// Brave query embedding: adds `_q_prime :- q, not _fail.`; q is bravely
/// true for p iff `_q_prime` is bravely true for the result.
EmbeddingArtifact embed_brave_query(const Program& p, std::string_view q);

/// Cautious query embedding: adds `_q_prime :- q.` and `_q_prime :- _fail.`;
/// q is cautiously true for p iff `_q_prime` is cautiously true for the
/// result.
EmbeddingArtifact embed_cautious_query(const Program& p, std::string_view q);

}  // namespace aspsc
