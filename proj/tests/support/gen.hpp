// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

// Seeded random generators for programs and formulas used across the unit
// and acceptance suites.

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "aspsc/qbf.hpp"
#include "aspsc/syntax.hpp"

namespace gen {

struct ProgramShape {
  unsigned n_atoms = 4;
  unsigned max_rules = 6;
  unsigned max_head = 2;        // 0-width heads are constraints
  bool allow_constraints = true;
  bool allow_negation = true;
  bool allow_disjunction = true;
};

inline std::string atom_name(unsigned i) { return std::string(1, char('a' + i)); }

inline aspsc::Program random_program(std::mt19937& rng, const ProgramShape& shape) {
  aspsc::Program p;
  for (unsigned i = 0; i < shape.n_atoms; ++i) p.atoms.intern(atom_name(i));

  std::uniform_int_distribution<unsigned> rule_count(1, shape.max_rules);
  std::uniform_int_distribution<unsigned> pick_atom(0, shape.n_atoms - 1);
  std::uniform_int_distribution<int> coin(0, 99);

  const unsigned n_rules = rule_count(rng);
  for (unsigned r = 0; r < n_rules; ++r) {
    aspsc::Rule rule;
    const unsigned max_head = shape.allow_disjunction ? shape.max_head : 1;
    unsigned head_size = std::uniform_int_distribution<unsigned>(
        shape.allow_constraints ? 0 : 1, max_head)(rng);
    for (unsigned i = 0; i < head_size; ++i) rule.head.push_back(pick_atom(rng));
    for (unsigned a = 0; a < shape.n_atoms; ++a) {
      const int roll = coin(rng);
      if (roll < 25) {
        rule.pos_body.push_back(a);
      } else if (roll < 45 && shape.allow_negation) {
        rule.neg_body.push_back(a);
      }
    }
    aspsc::normalize_rule(rule);
    if (rule.head.empty() && rule.pos_body.empty() && rule.neg_body.empty()) continue;
    p.rules.push_back(std::move(rule));
  }
  if (p.rules.empty()) {
    p.rules.push_back(aspsc::Rule{{pick_atom(rng)}, {}, {}});
  }
  return p;
}

/// The eight width-3 terms over one variable per block, indexed by sign bits
/// (bit 0: x negated, bit 1: y negated, bit 2: z negated).
inline std::vector<aspsc::QbfLit> unit_term(unsigned signs) {
  return {aspsc::QbfLit{"x", (signs & 1) != 0}, aspsc::QbfLit{"y", (signs & 2) != 0},
          aspsc::QbfLit{"z", (signs & 4) != 0}};
}

/// Every admissible Qbf3 with |X|=|Y|=|Z|=1 and up to `max_terms` distinct
/// width-3 terms.
inline std::vector<aspsc::Qbf3> exhaustive_unit_qbf3(unsigned max_terms) {
  std::vector<aspsc::Qbf3> out;
  for (unsigned subset = 1; subset < 256; ++subset) {
    if (static_cast<unsigned>(__builtin_popcount(subset)) > max_terms) continue;
    aspsc::Qbf3 f{{"x"}, {"y"}, {"z"}, {}};
    for (unsigned t = 0; t < 8; ++t) {
      if (subset & (1u << t)) f.terms.push_back(unit_term(t));
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// A random admissible Qbf2: block sizes from the given lists, clauses with
/// at least one X and one Y variable and no duplicate clause.
inline aspsc::Qbf2 random_qbf2(std::mt19937& rng, unsigned nx, unsigned ny,
                               unsigned max_clauses) {
  aspsc::Qbf2 f;
  for (unsigned i = 0; i < nx; ++i) f.x_vars.push_back("x" + std::to_string(i));
  for (unsigned i = 0; i < ny; ++i) f.y_vars.push_back("y" + std::to_string(i));

  std::uniform_int_distribution<unsigned> n_clauses(1, max_clauses);
  std::uniform_int_distribution<int> coin(0, 1);
  const unsigned want = n_clauses(rng);
  std::set<std::vector<aspsc::QbfLit>> seen;
  unsigned guard = 0;
  while (f.clauses.size() < want && guard++ < 200) {
    std::vector<aspsc::QbfLit> clause;
    // one mandatory variable per block, the rest by coin flip
    for (unsigned i = 0; i < nx; ++i) {
      const bool mandatory =
          i == std::uniform_int_distribution<unsigned>(0, nx - 1)(rng);
      if (mandatory || coin(rng)) clause.push_back({f.x_vars[i], coin(rng) == 1});
    }
    bool has_x = false;
    for (const auto& lit : clause) has_x |= lit.var.front() == 'x';
    if (!has_x) clause.push_back({f.x_vars[0], coin(rng) == 1});
    const unsigned y_pick = std::uniform_int_distribution<unsigned>(0, ny - 1)(rng);
    for (unsigned i = 0; i < ny; ++i) {
      if (i == y_pick || coin(rng)) clause.push_back({f.y_vars[i], coin(rng) == 1});
    }
    std::vector<aspsc::QbfLit> canon = clause;
    std::sort(canon.begin(), canon.end());
    if (seen.insert(canon).second) f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace gen
