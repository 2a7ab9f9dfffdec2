// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aspsc/errors.hpp"

namespace aspsc {

using AtomId = std::uint32_t;

/// Bijective mapping between atom names and dense ids 0..n-1.
///
/// Names follow `[a-z_][A-Za-z0-9_]*`; the leading-underscore namespace is
/// reserved for tool-minted atoms so that generated symbols never collide
/// with user vocabulary.
class AtomTable {
 public:
  static bool valid_name(std::string_view name);

  /// Returns the id of `name`, interning it if new. Throws
  /// InvariantViolation on a malformed name.
  AtomId intern(std::string_view name);

  std::optional<AtomId> find(std::string_view name) const;
  const std::string& name(AtomId id) const { return names_.at(id); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const AtomTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
};

/// One rule: head atoms, positive body atoms, negative body atoms.
/// All three are kept sorted and duplicate-free (set semantics).
struct Rule {
  std::vector<AtomId> head;
  std::vector<AtomId> pos_body;
  std::vector<AtomId> neg_body;

  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return head.size() == 1 && pos_body.empty() && neg_body.empty(); }
  bool is_normal() const { return head.size() <= 1; }
  bool is_positive() const { return neg_body.empty(); }

  auto operator<=>(const Rule&) const = default;
};

/// Canonicalizes a rule in place: sorts the three sets and drops duplicates.
void normalize_rule(Rule& r);

struct Program {
  AtomTable atoms;
  std::vector<Rule> rules;
};

/// Parses the text format (see README); throws ParseError. Rules appear in
/// statement order, duplicates included.
Program parse_program(std::string_view text);

/// Canonical text form: one rule per line, atoms in each group printed in
/// lexicographic name order.  parse_program(render_program(p)) equals p up
/// to rule order and atom renumbering.
std::string render_program(const Program& p);

/// At(P): sorted ids of the atoms occurring in some rule of p.
std::vector<AtomId> atoms_of(const Program& p);

/// Replaces each constraint `:- body` by `_co<k> :- body, not _co<k>` with a
/// fresh `_co<k>` atom; other rules are untouched.  Answer sets projected to
/// At(p) are preserved.
Program eliminate_constraints(const Program& p);

/// Drops duplicate rules, keeping first occurrences.
Program collapse_duplicate_rules(const Program& p);

/// Structural equality modulo rule order and atom-id renumbering
/// (atoms are matched by name).
bool equal_programs(const Program& a, const Program& b);

/// Appends facts over the given atom ids, skipping facts already present as
/// rules of p.
Program with_facts(const Program& p, const std::vector<AtomId>& facts);

}  // namespace aspsc
