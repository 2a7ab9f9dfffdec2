// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aspsc/syntax.hpp"

namespace aspsc {

/// Head-to-body dependency graph. (p, q) is a positive edge when some rule
/// has p in its head and q in its positive body, a negative edge when q is
/// in the negative body. Built on the constraint-eliminated program.
struct DependencyGraph {
  AtomTable atoms;  // table of the constraint-eliminated program
  std::vector<AtomId> nodes;
  std::vector<std::pair<AtomId, AtomId>> pos_edges;
  std::vector<std::pair<AtomId, AtomId>> neg_edges;
};

struct ClassReport {
  bool is_normal = false;
  bool is_positive = false;
  bool is_stratified = false;
  bool is_odd_cycle_free = false;
  bool is_head_cycle_free = false;
  bool is_definite_horn = false;
};

DependencyGraph dependency_graph(const Program& p);

/// Syntactic class membership. Normal/positive/definite-Horn are judged on
/// the rules as written; the cycle-based classes are judged on the
/// constraint-eliminated dependency graph (a constraint is an intrinsic
/// odd cycle).
ClassReport classify(const Program& p);

}  // namespace aspsc
