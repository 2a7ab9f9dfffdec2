// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aspsc/syntax.hpp"

namespace aspsc {

inline constexpr std::uint32_t kQbfVarGuard = 20;

struct QbfLit {
  std::string var;
  bool negated = false;

  auto operator<=>(const QbfLit&) const = default;
};

/// forall X exists Y forall Z (matrix in DNF).  Admissible instances have
/// nonempty pairwise-disjoint blocks and every term mentions at least one
/// variable from each block, none twice.
struct Qbf3 {
  std::vector<std::string> x_vars, y_vars, z_vars;
  std::vector<std::vector<QbfLit>> terms;
};

/// forall X exists Y (matrix in CNF).  Admissible instances have nonempty
/// disjoint blocks and every clause mentions at least one X and one Y
/// variable, none twice.
struct Qbf2 {
  std::vector<std::string> x_vars, y_vars;
  std::vector<std::vector<QbfLit>> clauses;
};

using Qbf = std::variant<Qbf3, Qbf2>;

/// Throws InvariantViolation when an admissibility condition fails.
void validate(const Qbf3& f);
void validate(const Qbf2& f);

/// Parses the .qbf text format (see README): quantifier lines, a `dnf` or
/// `cnf` line, then one term/clause per line with `-` marking negation.
Qbf parse_qbf(std::string_view text);

/// Truth by full assignment enumeration; guard: |X|+|Y|+|Z| <= 20.
bool qbf3_valid(const Qbf3& f);
bool qbf2_valid(const Qbf2& f);

/// Disjunctive encoding whose super-coherence coincides with validity of f.
/// Fresh atoms: `_n_<v>` for the complement of variable v, plus `_u`, `_v`,
/// `_w`.
Program encode_disjunctive(const Qbf3& f);

/// Normal-program encoding whose super-coherence coincides with validity of
/// f. Fresh atoms: `_n_<v>` plus `_v`, `_w`.
Program encode_normal(const Qbf2& f);

struct ReductionViolation {
  std::string item;                      // which structural clause failed
  std::vector<std::string> interpretation;  // offending interpretation (names)
  std::string detail;                    // expected-vs-found description
};

struct ReductionReport {
  bool passed = false;
  std::vector<ReductionViolation> violations;
};

struct VerifyOptions {
  std::uint32_t max_atoms = 12;
};

/// Checks that p has exactly the model and reduct-model structure required
/// of a reduction for the 3-block formula f, by exhaustive enumeration.
ReductionReport verify_phi_reduction(const Program& p, const Qbf3& f,
                                     const VerifyOptions& opts = {});

/// Same for the 2-block (normal) reduction structure.
ReductionReport verify_phi_norm_reduction(const Program& p, const Qbf2& f,
                                          const VerifyOptions& opts = {});

}  // namespace aspsc
