// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "../support/gen.hpp"
#include "../support/oracle.hpp"
#include "aspsc/analysis.hpp"
#include "aspsc/qbf.hpp"
#include "aspsc/supercoherence.hpp"

using namespace aspsc;

namespace {

Qbf3 qbf3(std::vector<std::vector<QbfLit>> terms) {
  return Qbf3{{"x"}, {"y"}, {"z"}, std::move(terms)};
}

QbfLit pos(const char* v) { return {v, false}; }
QbfLit neg(const char* v) { return {v, true}; }

}  // namespace

TEST_CASE("qbf text format parses into the right shapes") {
  const Qbf f = parse_qbf(
      "% a 3-block formula\n"
      "forall x\n"
      "exists y\n"
      "forall z\n"
      "dnf\n"
      "x y z\n"
      "-x -y z\n");
  REQUIRE(std::holds_alternative<Qbf3>(f));
  const Qbf3& f3 = std::get<Qbf3>(f);
  CHECK(f3.terms.size() == 2);
  CHECK(f3.terms[1][0].negated);

  const Qbf g = parse_qbf("forall x\nexists y\ncnf\nx y\n-x -y\n");
  REQUIRE(std::holds_alternative<Qbf2>(g));
  CHECK(std::get<Qbf2>(g).clauses.size() == 2);
}

TEST_CASE("inadmissible formulas are rejected, not repaired") {
  // missing Y variable in a term
  CHECK_THROWS_AS(parse_qbf("forall x\nexists y\nforall z\ndnf\nx z\n"),
                  InvariantViolation);
  // wrong prefix shapes
  CHECK_THROWS_AS(parse_qbf("forall x\nexists y\ndnf\nx y\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_qbf("exists x\nforall y\ncnf\nx y\n"), InvariantViolation);
  // duplicate variable inside a term, duplicate terms, shared blocks
  CHECK_THROWS_AS(parse_qbf("forall x\nexists y\nforall z\ndnf\nx x y z\n"),
                  InvariantViolation);
  CHECK_THROWS_AS(parse_qbf("forall x\nexists y\nforall z\ndnf\nx y z\nx y z\n"),
                  InvariantViolation);
  CHECK_THROWS_AS(parse_qbf("forall x\nexists x\ncnf\nx x\n"), InvariantViolation);
  // empty matrix, unknown variable, bad tokens
  CHECK_THROWS_AS(parse_qbf("forall x\nexists y\ncnf\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_qbf("forall x\nexists y\ncnf\nx w\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_qbf("forall x\nexists y\ncnf\nx _y\n"), ParseError);
  CHECK_THROWS_AS(parse_qbf("forall\nexists y\ncnf\nx y\n"), ParseError);
}

TEST_CASE("qbf3_valid by truth table") {
  // y can copy x: true
  CHECK(qbf3_valid(qbf3({{pos("x"), pos("y"), pos("z")},
                         {pos("x"), pos("y"), neg("z")},
                         {neg("x"), neg("y"), pos("z")},
                         {neg("x"), neg("y"), neg("z")}})));
  // single term dies at z = false
  CHECK_FALSE(qbf3_valid(qbf3({{pos("x"), pos("y"), pos("z")}})));
  // y := true works independent of z
  CHECK(qbf3_valid(qbf3({{pos("x"), pos("y"), pos("z")},
                         {pos("x"), pos("y"), neg("z")},
                         {neg("x"), pos("y"), pos("z")},
                         {neg("x"), pos("y"), neg("z")}})));
}

TEST_CASE("qbf2_valid by truth table") {
  Qbf2 f{{"x"}, {"y"}, {{pos("x"), pos("y")}, {neg("x"), neg("y")}}};
  CHECK(qbf2_valid(f));  // y := not x

  Qbf2 g{{"x"}, {"y"}, {{pos("x"), pos("y")}, {pos("x"), neg("y")}}};
  CHECK_FALSE(qbf2_valid(g));  // x = false kills one clause

  Qbf2 h{{"x"}, {"y"}, {{pos("x"), pos("y")}}};
  CHECK(qbf2_valid(h));  // y := true
}

TEST_CASE("encode_disjunctive matches the template counts and shapes") {
  const Qbf3 f = qbf3({{pos("x"), pos("y"), pos("z")}});
  const Program p = encode_disjunctive(f);
  CHECK(p.rules.size() == 5 + 7 + 10 + 1 + 3);  // 26
  CHECK(atoms_of(p).size() == 9);
  CHECK(p.atoms.size() == 9);

  const std::string text = render_program(p);
  CHECK(text.find("x :- _u, _w.") != std::string::npos);
  CHECK(text.find("_v :- not _u.") != std::string::npos);
  CHECK(text.find("_u | _w :- _n_z, z.") != std::string::npos);
  CHECK(text.find("_u | _w :- x, y, z.") != std::string::npos);  // the term rule
  for (const Rule& r : p.rules) CHECK_FALSE(r.is_constraint());

  // negated literals use the complement atoms
  const Qbf3 g = qbf3({{neg("x"), pos("y"), neg("z")}});
  CHECK(render_program(encode_disjunctive(g)).find("_u | _w :- _n_x, _n_z, y.") !=
        std::string::npos);

  const Qbf3 wide{{"x1", "x2"}, {"y"}, {"z"},
                  {{pos("x1"), pos("y"), pos("z")}, {pos("x2"), pos("y"), neg("z")}}};
  CHECK(encode_disjunctive(wide).rules.size() == 5 * 2 + 7 + 10 + 2 + 3);
  CHECK(atoms_of(encode_disjunctive(wide)).size() == 2 * 4 + 3);
}

TEST_CASE("encode_normal matches the template counts and shapes") {
  const Qbf2 f{{"x"}, {"y"}, {{pos("x"), pos("y")}, {neg("x"), neg("y")}}};
  const Program p = encode_normal(f);
  CHECK(p.rules.size() == 2 + 4 + (2 + 2) * 3 + 2 + 1);  // 21
  CHECK(atoms_of(p).size() == 6);
  CHECK(classify(p).is_normal);

  const std::string text = render_program(p);
  CHECK(text.find("_w :- not _v.") != std::string::npos);
  CHECK(text.find("_v :- _n_x, _n_y.") != std::string::npos);  // complement of clause 1
  CHECK(text.find("_v :- x, y.") != std::string::npos);        // complement of clause 2
  for (const Rule& r : p.rules) CHECK_FALSE(r.is_constraint());

  const Qbf2 wide{{"x1", "x2"}, {"y1", "y2"},
                  {{pos("x1"), pos("y1")}, {neg("x2"), neg("y2")}}};
  CHECK(encode_normal(wide).rules.size() == 2 * 2 + 4 * 2 + (2 * 2 + 2) * (1 + 2 + 2) + 2 + 1);
  CHECK(atoms_of(encode_normal(wide)).size() == 2 * 4 + 2);
}

TEST_CASE("disjunctive encoding has exactly the canonical model families") {
  // Independent structural check: the model set of the encoding, computed
  // with the set-based oracle, matches the hand-built families
  //   U, M[I,J] (u side), M'[I,J] (w side)
  // for the single-term formula x & y & z.
  const Qbf3 f = qbf3({{pos("x"), pos("y"), pos("z")}});
  const Program p = encode_disjunctive(f);
  const auto rules = oracle::named_rules(p);

  auto assignment = [](bool on, const char* atom, const char* bar) {
    return on ? oracle::Atoms{atom} : oracle::Atoms{bar};
  };
  std::set<oracle::Atoms> expected;
  const oracle::Atoms universe{"x", "y", "z", "_n_x", "_n_y", "_n_z", "_u", "_v", "_w"};
  expected.insert(universe);
  for (bool xv : {false, true}) {
    for (bool yv : {false, true}) {
      oracle::Atoms base = assignment(xv, "x", "_n_x");
      for (const auto& a : assignment(yv, "y", "_n_y")) base.insert(a);
      base.insert("z");
      base.insert("_n_z");
      base.insert("_v");
      oracle::Atoms m = base, mp = base;
      m.insert("_u");
      mp.insert("_w");
      expected.insert(m);
      expected.insert(mp);
    }
  }

  std::set<oracle::Atoms> found;
  for (const auto& interp : oracle::all_subsets(oracle::atom_names(p))) {
    if (oracle::satisfies(interp, rules)) found.insert(interp);
  }
  CHECK(found == expected);
}

TEST_CASE("verify_phi_reduction passes on encoder output and fails on mutations") {
  const Qbf3 f = qbf3({{pos("x"), pos("y"), pos("z")}, {neg("x"), neg("y"), pos("z")}});
  const Program p = encode_disjunctive(f);
  const ReductionReport ok = verify_phi_reduction(p, f);
  CHECK(ok.passed);
  CHECK(ok.violations.empty());

  // deleting the head-guess rule for x breaks the model structure
  Program mutant = p;
  mutant.rules.erase(mutant.rules.begin());  // `x | _n_x.`
  const ReductionReport bad = verify_phi_reduction(mutant, f);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.violations.empty());

  // deleting `_v :- not _u.` also breaks it
  Program mutant2 = p;
  for (std::size_t i = 0; i < mutant2.rules.size(); ++i) {
    const Rule& r = mutant2.rules[i];
    if (r.neg_body.size() == 1 && r.head.size() == 1 &&
        mutant2.atoms.name(r.head[0]) == "_v") {
      mutant2.rules.erase(mutant2.rules.begin() + i);
      break;
    }
  }
  CHECK_FALSE(verify_phi_reduction(mutant2, f).passed);

  // a program over an extra atom is a universe mismatch
  Program extra = p;
  extra.rules.push_back(Rule{{extra.atoms.intern("spare")}, {}, {}});
  CHECK_THROWS_AS(verify_phi_reduction(extra, f), UniverseMismatch);
}

TEST_CASE("verify_phi_norm_reduction passes on encoder output and fails on mutations") {
  const Qbf2 f{{"x"}, {"y"}, {{pos("x"), pos("y")}, {neg("x"), neg("y")}}};
  const Program p = encode_normal(f);
  CHECK(verify_phi_norm_reduction(p, f).passed);

  Program mutant = p;
  mutant.rules.pop_back();  // `_w :- not _v.`
  const ReductionReport bad = verify_phi_norm_reduction(mutant, f);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.violations.empty());

  Program extra = p;
  extra.rules.push_back(Rule{{extra.atoms.intern("spare")}, {}, {}});
  CHECK_THROWS_AS(verify_phi_norm_reduction(extra, f), UniverseMismatch);
}

TEST_CASE("normal encoding: forced-polarity formulas refute super-coherence") {
  // Known soundness gap of the normal rule templates: when some Y-variable
  // takes the same value in every satisfying assignment, adding the fact for
  // its unused polarity atom kills all answer sets, although the formula is
  // valid. Both engines agree; the acceptance suite reports this as a red
  // soundness criterion. Pinned here so the behavior is explicit.
  const Qbf2 forced_true{{"x"}, {"y"}, {{neg("x"), pos("y")}, {pos("x"), pos("y")}}};
  CHECK(qbf2_valid(forced_true));
  const Program p = encode_normal(forced_true);
  CHECK(verify_phi_norm_reduction(p, forced_true).passed);  // structure is as required
  const ScVerdict v = is_super_coherent(p);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(interpretation_names(*v.witness, v.universe) ==
        std::vector<std::string>{"_n_y"});
  CHECK(oracle::answer_sets_with_facts(p, {"_n_y"}).empty());

  const Qbf2 forced_false{{"x"}, {"y"}, {{pos("x"), neg("y")}, {neg("x"), neg("y")}}};
  CHECK(qbf2_valid(forced_false));
  const ScVerdict w = is_super_coherent(encode_normal(forced_false));
  CHECK_FALSE(w.holds);
  CHECK(interpretation_names(*w.witness, w.universe) == std::vector<std::string>{"y"});

  // with both polarities realizable the encoding stays super-coherent
  const Qbf2 free_y{{"x"}, {"y"}, {{pos("x"), pos("y")}, {neg("x"), neg("y")}}};
  CHECK(qbf2_valid(free_y));
  CHECK(is_super_coherent(encode_normal(free_y)).holds);
}

TEST_CASE("hardness reduction soundness on a sample of unit instances") {
  // exhaustive single-term and two-term families are covered by the
  // acceptance suite; spot-check a few here including both verdicts
  const Qbf3 t = qbf3({{pos("x"), pos("y"), pos("z")},
                       {pos("x"), pos("y"), neg("z")},
                       {neg("x"), neg("y"), pos("z")},
                       {neg("x"), neg("y"), neg("z")}});
  CHECK(qbf3_valid(t));
  CHECK(is_super_coherent(encode_disjunctive(t)).holds);

  const Qbf3 u = qbf3({{pos("x"), pos("y"), pos("z")}});
  CHECK_FALSE(qbf3_valid(u));
  CHECK_FALSE(is_super_coherent(encode_disjunctive(u)).holds);

  const Qbf2 c{{"x"}, {"y"}, {{pos("x"), pos("y")}, {neg("x"), neg("y")}}};
  CHECK(qbf2_valid(c));
  CHECK(is_super_coherent(encode_normal(c)).holds);

  const Qbf2 d{{"x"}, {"y"}, {{pos("x"), pos("y")}, {pos("x"), neg("y")}}};
  CHECK_FALSE(qbf2_valid(d));
  CHECK_FALSE(is_super_coherent(encode_normal(d)).holds);
}
