// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/embedding.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "aspsc/analysis.hpp"
#include "enumerate.hpp"

namespace aspsc {

namespace {

AtomId mint(AtomTable& table, const std::string& name) {
  if (table.find(name)) {
    throw InvariantViolation("cannot mint fresh atom '" + name +
                             "': it already occurs in the program");
  }
  return table.intern(name);
}

bool has_constraint(const Program& p) {
  return std::any_of(p.rules.begin(), p.rules.end(),
                     [](const Rule& r) { return r.is_constraint(); });
}

}  // namespace

EmbeddingArtifact strat_transform(const Program& p, const StratOptions& opts) {
  EmbeddingArtifact art;
  art.transform = "strat";

  Program base = p;
  if (has_constraint(p)) {
    if (!opts.auto_eliminate_constraints) {
      throw ConstraintPresent("strat requires a constraint-free program");
    }
    base = eliminate_constraints(p);
    art.warnings.push_back("constraints were eliminated before the transform");
  }

  // The transformed vocabulary: the input program's atoms plus any caller
  // extras; the recovery universe additionally excludes the atoms minted by
  // constraint elimination.
  art.program.atoms = base.atoms;
  const std::vector<AtomId> p_atoms = atoms_of(p);
  std::set<AtomId> recovery(p_atoms.begin(), p_atoms.end());
  for (const auto& name : opts.extra_universe) {
    recovery.insert(art.program.atoms.intern(name));
  }
  std::set<AtomId> universe(recovery.begin(), recovery.end());
  for (AtomId a : atoms_of(base)) universe.insert(a);
  art.original_universe.assign(recovery.begin(), recovery.end());

  // All scaffold names must be fresh w.r.t. the input vocabulary.
  for (AtomId a : universe) {
    const std::string& name = art.program.atoms.name(a);
    for (const std::string& minted : {"_t_" + name, "_f_" + name}) {
      if (art.program.atoms.find(minted)) {
        throw InvariantViolation("cannot mint fresh atom '" + minted +
                                 "': it already occurs in the program");
      }
    }
  }
  const AtomId fail = mint(art.program.atoms, "_fail");
  art.fail_atom = fail;

  for (const Rule& r : base.rules) {
    Rule nr;
    nr.head = r.head;
    nr.pos_body = r.pos_body;
    for (AtomId a : r.neg_body) {
      const std::string f_name = "_f_" + art.program.atoms.name(a);
      const AtomId f = art.program.atoms.find(f_name)
                           ? *art.program.atoms.find(f_name)
                           : mint(art.program.atoms, f_name);
      nr.pos_body.push_back(f);
    }
    normalize_rule(nr);
    art.program.rules.push_back(std::move(nr));
  }

  for (AtomId a : universe) {
    const std::string& name = art.program.atoms.name(a);
    const std::string t_name = "_t_" + name;
    const std::string f_name = "_f_" + name;
    const AtomId t = art.program.atoms.find(t_name) ? *art.program.atoms.find(t_name)
                                                    : mint(art.program.atoms, t_name);
    const AtomId f = art.program.atoms.find(f_name) ? *art.program.atoms.find(f_name)
                                                    : mint(art.program.atoms, f_name);
    Rule guess{{t, f}, {}, {}};
    normalize_rule(guess);
    art.program.rules.push_back(std::move(guess));
    art.program.rules.push_back(Rule{{t}, {a}, {}});
    art.program.rules.push_back(Rule{{fail}, {t}, {a}});
  }
  return art;
}

ShiftResult shift_transform(const Program& p) {
  ShiftResult out;
  out.input_head_cycle_free = classify(p).is_head_cycle_free;
  out.program.atoms = p.atoms;
  for (const Rule& r : p.rules) {
    if (r.head.empty()) {
      out.program.rules.push_back(r);
      continue;
    }
    for (AtomId a : r.head) {
      Rule nr;
      nr.head = {a};
      nr.pos_body = r.pos_body;
      nr.neg_body = r.neg_body;
      for (AtomId other : r.head) {
        if (other != a) nr.neg_body.push_back(other);
      }
      normalize_rule(nr);
      out.program.rules.push_back(std::move(nr));
    }
  }
  return out;
}

EmbeddingArtifact strat_shift(const Program& p, const StratOptions& opts) {
  if (!std::all_of(p.rules.begin(), p.rules.end(),
                   [](const Rule& r) { return r.is_normal(); })) {
    throw NotNormal("strat-shift requires a normal input program");
  }
  EmbeddingArtifact art = strat_transform(p, opts);
  // Strat output of a normal program is head-cycle free, so shifting
  // preserves the answer-set correspondence for every fact extension.
  ShiftResult shifted = shift_transform(art.program);
  art.program = std::move(shifted.program);
  art.transform = "strat_shift";
  return art;
}

std::vector<Interpretation> recover_answer_sets(const EmbeddingArtifact& art,
                                                const SolveOptions& opts) {
  const AnswerSetReport report = answer_sets(art.program, opts);
  std::uint32_t universe_mask = 0;
  for (AtomId a : art.original_universe) universe_mask |= 1u << a;

  std::set<std::uint32_t> projected;
  for (const Interpretation& m : report.answer_sets) {
    if (art.fail_atom && m.contains(*art.fail_atom)) continue;
    projected.insert(m.bits & universe_mask);
  }
  std::vector<Interpretation> out;
  out.reserve(projected.size());
  for (std::uint32_t bits : projected) {
    out.push_back(Interpretation{bits, art.program.atoms.size()});
  }
  std::sort(out.begin(), out.end(), [](const Interpretation& a, const Interpretation& b) {
    const int ca = std::popcount(a.bits), cb = std::popcount(b.bits);
    return ca != cb ? ca < cb : a.bits < b.bits;
  });
  return out;
}

EmbeddingArtifact embed_coherence(const Program& p) { return strat_transform(p); }

namespace {

EmbeddingArtifact embed_query(const Program& p, std::string_view q, bool brave) {
  EmbeddingArtifact art = strat_transform(p);
  const auto id = art.program.atoms.find(q);
  const bool known =
      id && std::binary_search(art.original_universe.begin(),
                               art.original_universe.end(), *id);
  if (!known) {
    throw UnknownAtom("query atom '" + std::string(q) + "' does not occur in the program");
  }
  const AtomId q_prime = mint(art.program.atoms, "_q_prime");
  art.query_atom = q_prime;
  if (brave) {
    art.program.rules.push_back(Rule{{q_prime}, {*id}, {*art.fail_atom}});
  } else {
    art.program.rules.push_back(Rule{{q_prime}, {*id}, {}});
    art.program.rules.push_back(Rule{{q_prime}, {*art.fail_atom}, {}});
  }
  return art;
}

}  // namespace

EmbeddingArtifact embed_brave_query(const Program& p, std::string_view q) {
  return embed_query(p, q, true);
}

EmbeddingArtifact embed_cautious_query(const Program& p, std::string_view q) {
  return embed_query(p, q, false);
}

}  // namespace aspsc
