// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "../support/gen.hpp"
#include "../support/oracle.hpp"
#include "aspsc/analysis.hpp"
#include "aspsc/embedding.hpp"
#include "aspsc/supercoherence.hpp"

using namespace aspsc;

namespace {

std::set<oracle::Atoms> recovered_name_sets(const EmbeddingArtifact& art) {
  std::set<oracle::Atoms> out;
  for (const Interpretation& m : recover_answer_sets(art)) {
    const auto names = interpretation_names(m, art.program.atoms);
    out.insert(oracle::Atoms(names.begin(), names.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("strat_transform emits the guess/check scaffold") {
  const Program p = parse_program("a :- not b.");
  const EmbeddingArtifact art = strat_transform(p);
  CHECK(equal_programs(art.program, parse_program("a :- _f_b.\n"
                                                  "_t_a | _f_a.\n"
                                                  "_t_a :- a.\n"
                                                  "_fail :- _t_a, not a.\n"
                                                  "_t_b | _f_b.\n"
                                                  "_t_b :- b.\n"
                                                  "_fail :- _t_b, not b.\n")));
  CHECK(art.program.rules.size() == p.rules.size() + 3 * 2);
  CHECK(classify(art.program).is_stratified);
  CHECK(art.fail_atom.has_value());
  CHECK(art.program.atoms.name(*art.fail_atom) == "_fail");
  CHECK(art.original_universe.size() == 2);
  CHECK(art.warnings.empty());
}

TEST_CASE("strat rule counts scale with the universe") {
  std::mt19937 rng(107);
  for (int i = 0; i < 50; ++i) {
    gen::ProgramShape shape;
    shape.n_atoms = 1 + i % 4;
    shape.allow_constraints = false;
    const Program p = gen::random_program(rng, shape);
    const EmbeddingArtifact art = strat_transform(p);
    CHECK(art.program.rules.size() == p.rules.size() + 3 * atoms_of(p).size());
    CHECK(classify(art.program).is_stratified);
  }
}

TEST_CASE("strat universe can be extended and constraints are auto-eliminated") {
  const Program p = parse_program("a :- not b.");
  StratOptions opts;
  opts.extra_universe = {"c"};
  const EmbeddingArtifact art = strat_transform(p, opts);
  CHECK(art.original_universe.size() == 3);
  CHECK(art.program.rules.size() == 1 + 3 * 3);

  const Program with_constraint = parse_program("a. :- a, not b.");
  const EmbeddingArtifact art2 = strat_transform(with_constraint);
  CHECK_FALSE(art2.warnings.empty());
  CHECK(art2.program.atoms.find("_co0").has_value());
  // recovery still matches the original program exactly
  CHECK(recovered_name_sets(art2) == oracle::answer_sets(with_constraint));

  StratOptions strict;
  strict.auto_eliminate_constraints = false;
  CHECK_THROWS_AS(strat_transform(with_constraint, strict), ConstraintPresent);

  CHECK_THROWS_AS(strat_transform(parse_program("_t_a. a.")), InvariantViolation);
}

TEST_CASE("shift_transform on the named examples") {
  const ShiftResult s = shift_transform(parse_program("a | b."));
  CHECK(equal_programs(s.program, parse_program("a :- not b. b :- not a.")));
  CHECK(s.input_head_cycle_free);

  const ShiftResult t = shift_transform(parse_program("a :- b."));
  CHECK(equal_programs(t.program, parse_program("a :- b.")));

  const ShiftResult u = shift_transform(parse_program(":- a."));
  CHECK(equal_programs(u.program, parse_program(":- a.")));

  const ShiftResult warn = shift_transform(parse_program("a | b. a :- b. b :- a."));
  CHECK_FALSE(warn.input_head_cycle_free);
}

TEST_CASE("strat of a normal program is head-cycle-free") {
  std::mt19937 rng(109);
  for (int i = 0; i < 60; ++i) {
    gen::ProgramShape shape;
    shape.n_atoms = 1 + i % 4;
    shape.allow_disjunction = false;
    shape.allow_constraints = false;
    const Program p = gen::random_program(rng, shape);
    CHECK(classify(strat_transform(p).program).is_head_cycle_free);
  }
}

TEST_CASE("strat_shift replaces the guess by complementary default rules") {
  const Program p = parse_program("a :- not b.");
  const EmbeddingArtifact art = strat_shift(p);
  CHECK(classify(art.program).is_normal);
  const std::string text = render_program(art.program);
  CHECK(text.find("_t_a :- not _f_a.") != std::string::npos);
  CHECK(text.find("_f_a :- not _t_a.") != std::string::npos);
  CHECK(is_super_coherent(art.program).holds);

  CHECK_THROWS_AS(strat_shift(parse_program("a | b.")), NotNormal);

  // strat_shift equals strat followed by shift
  const EmbeddingArtifact strat_art = strat_transform(p);
  CHECK(equal_programs(art.program, shift_transform(strat_art.program).program));
}

TEST_CASE("recover_answer_sets inverts strat") {
  const EmbeddingArtifact a1 = strat_transform(parse_program("a :- not b."));
  CHECK(recovered_name_sets(a1) == std::set<oracle::Atoms>{{"a"}});

  const EmbeddingArtifact a2 = strat_transform(parse_program("a :- not a."));
  CHECK(recovered_name_sets(a2).empty());

  StratOptions opts;
  opts.extra_universe = {"a"};
  const EmbeddingArtifact a3 = strat_transform(Program{}, opts);
  CHECK(recovered_name_sets(a3) == std::set<oracle::Atoms>{{}});
}

TEST_CASE("strat recovery matches direct answer sets on random programs") {
  std::mt19937 rng(113);
  for (int i = 0; i < 150; ++i) {
    gen::ProgramShape shape;
    shape.n_atoms = 1 + i % 4;
    shape.allow_constraints = false;
    const Program p = gen::random_program(rng, shape);
    CHECK(recovered_name_sets(strat_transform(p)) == oracle::answer_sets(p));
  }
}

TEST_CASE("strat body relation under the complement-consistency hypotheses") {
  std::mt19937 rng(127);
  for (int i = 0; i < 60; ++i) {
    gen::ProgramShape shape;
    shape.n_atoms = 1 + i % 3;
    shape.allow_constraints = false;
    const Program p = gen::random_program(rng, shape);
    const EmbeddingArtifact art = strat_transform(p);
    const Program& sp = art.program;

    std::vector<AtomId> universe = art.original_universe;
    const std::uint32_t n_strat = sp.atoms.size();

    // enumerate interpretations I over strat's vocabulary satisfying:
    //  (1) exactly one of _t_a / _f_a per universe atom
    //  (2) a in I iff _t_a in I
    // and check: strat body true in I  <=>  original body true in I & U
    const std::uint32_t k = static_cast<std::uint32_t>(universe.size());
    for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
      Interpretation I{0, n_strat};
      for (std::uint32_t j = 0; j < k; ++j) {
        const AtomId a = universe[j];
        const std::string& name = sp.atoms.name(a);
        const AtomId t = *sp.atoms.find("_t_" + name);
        const AtomId f = *sp.atoms.find("_f_" + name);
        if (pick & (1u << j)) {
          I.bits |= (1u << a) | (1u << t);
        } else {
          I.bits |= 1u << f;
        }
      }
      for (std::size_t r = 0; r < p.rules.size(); ++r) {
        const Rule& orig = p.rules[r];
        const Rule& strat_rule = sp.rules[r];
        bool strat_body = true;
        for (AtomId b : strat_rule.pos_body) strat_body &= I.contains(b);
        bool orig_body = true;
        for (AtomId b : orig.pos_body) orig_body &= I.contains(b);
        for (AtomId b : orig.neg_body) orig_body &= !I.contains(b);
        CHECK(strat_body == orig_body);
      }
    }
  }
}

TEST_CASE("shift preserves answer sets of head-cycle-free programs under facts") {
  std::mt19937 rng(131);
  int covered = 0;
  for (int i = 0; i < 200 && covered < 60; ++i) {
    gen::ProgramShape shape;
    shape.n_atoms = 1 + i % 4;
    const Program p = gen::random_program(rng, shape);
    if (!classify(p).is_head_cycle_free) continue;
    ++covered;
    const ShiftResult s = shift_transform(p);
    for (const auto& f : oracle::all_subsets(oracle::atom_names(p))) {
      CHECK(oracle::answer_sets_with_facts(p, f) ==
            oracle::answer_sets_with_facts(s.program, f));
    }
  }
  CHECK(covered >= 60);
}

TEST_CASE("coherence and query embeddings answer through the transformed program") {
  const Program inc = parse_program("a :- not a.");
  const EmbeddingArtifact e1 = embed_coherence(inc);
  CHECK(query(e1.program, "_fail", QueryMode::cautious));

  const EmbeddingArtifact e2 = embed_coherence(parse_program("a."));
  CHECK_FALSE(query(e2.program, "_fail", QueryMode::cautious));

  const EmbeddingArtifact e3 = embed_coherence(Program{});
  CHECK_FALSE(query(e3.program, "_fail", QueryMode::cautious));

  const Program guess = parse_program("a | b.");
  const EmbeddingArtifact b1 = embed_brave_query(guess, "a");
  CHECK(query(b1.program, "_q_prime", QueryMode::brave));
  const EmbeddingArtifact b2 = embed_brave_query(inc, "a");
  CHECK_FALSE(query(b2.program, "_q_prime", QueryMode::brave));
  CHECK_THROWS_AS(embed_brave_query(guess, "zz"), UnknownAtom);

  const EmbeddingArtifact c1 = embed_cautious_query(guess, "a");
  CHECK_FALSE(query(c1.program, "_q_prime", QueryMode::cautious));
  const EmbeddingArtifact c2 = embed_cautious_query(parse_program("a."), "a");
  CHECK(query(c2.program, "_q_prime", QueryMode::cautious));
  const EmbeddingArtifact c3 = embed_cautious_query(inc, "a");
  CHECK(query(c3.program, "_q_prime", QueryMode::cautious));  // via the fail path
}

TEST_CASE("transforms work beyond the enumeration width") {
  // 26 user atoms -> 79 atoms after strat; transforms and classification are
  // unconstrained, only interpretation-level operations are width-limited
  std::string text;
  for (char c = 'a'; c <= 'z'; ++c) {
    text += std::string(1, c) + " :- not " + (c == 'z' ? 'a' : char(c + 1)) + std::string(".\n");
  }
  const Program big = parse_program(text);
  const EmbeddingArtifact art = strat_transform(big);
  CHECK(art.program.atoms.size() == 26 * 3 + 1);
  CHECK(classify(art.program).is_stratified);
  CHECK(equal_programs(parse_program(render_program(art.program)), art.program));
  CHECK_THROWS_AS(recover_answer_sets(art), GuardExceeded);
}

TEST_CASE("strat output is super-coherent on small samples") {
  std::mt19937 rng(137);
  for (int i = 0; i < 40; ++i) {
    gen::ProgramShape shape;
    shape.n_atoms = 1 + i % 3;
    shape.max_rules = 4;
    shape.allow_constraints = false;
    const Program p = gen::random_program(rng, shape);
    const EmbeddingArtifact art = strat_transform(p);
    CHECK(is_super_coherent(art.program).holds);
  }
}
