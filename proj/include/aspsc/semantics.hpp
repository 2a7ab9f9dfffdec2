// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "aspsc/syntax.hpp"

namespace aspsc {

inline constexpr std::uint32_t kMaxUniverseBits = 32;
inline constexpr std::uint32_t kDefaultSolveGuard = 24;
inline constexpr std::uint32_t kDefaultScGuard = 16;

/// A fixed-width bit vector over the atom ids of one table: bit i set means
/// atom i is true.
struct Interpretation {
  std::uint32_t bits = 0;
  std::uint32_t universe_size = 0;

  bool contains(AtomId id) const { return (bits >> id) & 1u; }
  auto operator<=>(const Interpretation&) const = default;
};

/// Tuning knobs shared by the enumeration entry points.
struct SolveOptions {
  std::uint32_t max_atoms = kDefaultSolveGuard;
  unsigned parallel = 1;
};

struct AnswerSetReport {
  std::vector<Interpretation> answer_sets;  // ascending (cardinality, bits)
  AtomTable universe;
  std::uint64_t enumerated = 0;  // interpretations visited
};

/// True iff i satisfies every rule of p. Requires i.universe_size ==
/// p.atoms.size() (throws UniverseMismatch otherwise).
bool satisfies(const Interpretation& i, const Program& p);

/// Gelfond-Lifschitz reduct P^I: rules whose negative body intersects I are
/// dropped, negative literals are stripped from the rest.
Program reduct(const Program& p, const Interpretation& i);

/// True iff m is a subset-minimal model of reduct(p, m).
bool is_answer_set(const Program& p, const Interpretation& m);

/// Exhaustively enumerates all m subseteq At(p); throws GuardExceeded when
/// |At(p)| exceeds opts.max_atoms.
AnswerSetReport answer_sets(const Program& p, const SolveOptions& opts = {});

enum class QueryMode { brave, cautious };

/// Brave: q in some answer set. Cautious: q in all answer sets (vacuously
/// true when there are none). q need not occur in p.
bool query(const Program& p, std::string_view atom, QueryMode mode,
           const SolveOptions& opts = {});

/// Atom names of i, sorted lexicographically.
std::vector<std::string> interpretation_names(const Interpretation& i,
                                              const AtomTable& table);

}  // namespace aspsc
