// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/qbf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "aspsc/semantics.hpp"
#include "enumerate.hpp"

namespace aspsc {

// ---------------------------------------------------------------------------
// Validation

namespace {

bool valid_var_name(const std::string& v) {
  // Underscore-prefixed names are reserved for minted atoms, so a formula
  // variable must start with a lowercase letter.
  return AtomTable::valid_name(v) && v.front() != '_';
}

void check_blocks(const std::vector<const std::vector<std::string>*>& blocks,
                  const std::vector<std::string>& block_names) {
  std::set<std::string> seen;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b]->empty()) {
      throw InvariantViolation("quantifier block " + block_names[b] + " is empty");
    }
    for (const auto& v : *blocks[b]) {
      if (!valid_var_name(v)) {
        throw InvariantViolation("invalid variable name '" + v + "'");
      }
      if (!seen.insert(v).second) {
        throw InvariantViolation("variable '" + v + "' occurs in two blocks");
      }
    }
  }
}

// Shared admissibility checks for one term/clause: known variables, no
// variable twice, at least one variable from each required block.
void check_row(const std::vector<QbfLit>& row, std::size_t index, const char* kind,
               const std::map<std::string, int>& block_of, int n_blocks) {
  if (row.empty()) {
    throw InvariantViolation(std::string(kind) + " " + std::to_string(index) + " is empty");
  }
  std::set<std::string> vars;
  std::vector<bool> covered(static_cast<std::size_t>(n_blocks), false);
  for (const QbfLit& lit : row) {
    auto it = block_of.find(lit.var);
    if (it == block_of.end()) {
      throw InvariantViolation("variable '" + lit.var + "' is not quantified");
    }
    if (!vars.insert(lit.var).second) {
      throw InvariantViolation("variable '" + lit.var + "' occurs twice in " +
                               kind + " " + std::to_string(index));
    }
    covered[static_cast<std::size_t>(it->second)] = true;
  }
  for (int b = 0; b < n_blocks; ++b) {
    if (!covered[static_cast<std::size_t>(b)]) {
      throw InvariantViolation(std::string(kind) + " " + std::to_string(index) +
                               " mentions no variable of block " + std::to_string(b + 1));
    }
  }
}

void check_matrix(const std::vector<std::vector<QbfLit>>& rows, const char* kind,
                  const std::map<std::string, int>& block_of, int n_blocks) {
  if (rows.empty()) {
    throw InvariantViolation(std::string("matrix has no ") + kind);
  }
  std::set<std::vector<QbfLit>> canon;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_row(rows[i], i + 1, kind, block_of, n_blocks);
    std::vector<QbfLit> sorted = rows[i];
    std::sort(sorted.begin(), sorted.end());
    if (!canon.insert(sorted).second) {
      throw InvariantViolation(std::string("duplicate ") + kind + " " + std::to_string(i + 1));
    }
  }
}

std::map<std::string, int> block_index3(const Qbf3& f) {
  std::map<std::string, int> block_of;
  for (const auto& v : f.x_vars) block_of[v] = 0;
  for (const auto& v : f.y_vars) block_of[v] = 1;
  for (const auto& v : f.z_vars) block_of[v] = 2;
  return block_of;
}

std::map<std::string, int> block_index2(const Qbf2& f) {
  std::map<std::string, int> block_of;
  for (const auto& v : f.x_vars) block_of[v] = 0;
  for (const auto& v : f.y_vars) block_of[v] = 1;
  return block_of;
}

}  // namespace

void validate(const Qbf3& f) {
  check_blocks({&f.x_vars, &f.y_vars, &f.z_vars}, {"X", "Y", "Z"});
  check_matrix(f.terms, "term", block_index3(f), 3);
}

void validate(const Qbf2& f) {
  check_blocks({&f.x_vars, &f.y_vars}, {"X", "Y"});
  check_matrix(f.clauses, "clause", block_index2(f), 2);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct QbfLine {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<QbfLine> tokenize_lines(std::string_view text) {
  std::vector<QbfLine> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view line = text.substr(pos, eol - pos);
    if (const auto comment = line.find('%'); comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    QbfLine out{number, {}};
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.tokens.push_back(tok);
    if (!out.tokens.empty()) lines.push_back(std::move(out));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

std::vector<QbfLit> parse_lit_row(const QbfLine& line) {
  std::vector<QbfLit> row;
  for (const std::string& tok : line.tokens) {
    QbfLit lit;
    std::string name = tok;
    if (!name.empty() && name.front() == '-') {
      lit.negated = true;
      name = name.substr(1);
    }
    if (name.empty() || !valid_var_name(name)) {
      throw ParseError(line.number, 1, "invalid literal '" + tok + "'");
    }
    lit.var = name;
    row.push_back(std::move(lit));
  }
  return row;
}

}  // namespace

Qbf parse_qbf(std::string_view text) {
  const std::vector<QbfLine> lines = tokenize_lines(text);

  std::vector<std::pair<bool, std::vector<std::string>>> prefix;  // (is_forall, vars)
  std::size_t i = 0;
  std::string matrix_kind;
  for (; i < lines.size(); ++i) {
    const QbfLine& line = lines[i];
    const std::string& kw = line.tokens.front();
    if (kw == "forall" || kw == "exists") {
      if (line.tokens.size() < 2) {
        throw ParseError(line.number, 1, "quantifier line without variables");
      }
      prefix.emplace_back(kw == "forall",
                          std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } else if (kw == "dnf" || kw == "cnf") {
      if (line.tokens.size() != 1) {
        throw ParseError(line.number, 1, "unexpected tokens after '" + kw + "'");
      }
      matrix_kind = kw;
      ++i;
      break;
    } else {
      throw ParseError(line.number, 1, "expected 'forall', 'exists', 'dnf' or 'cnf'");
    }
  }
  if (matrix_kind.empty()) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                     "missing 'dnf' or 'cnf' line");
  }

  std::vector<std::vector<QbfLit>> rows;
  for (; i < lines.size(); ++i) rows.push_back(parse_lit_row(lines[i]));

  if (matrix_kind == "dnf") {
    if (prefix.size() != 3 || !prefix[0].first || prefix[1].first || !prefix[2].first) {
      throw InvariantViolation("a dnf matrix requires the prefix forall/exists/forall");
    }
    Qbf3 f{prefix[0].second, prefix[1].second, prefix[2].second, std::move(rows)};
    validate(f);
    return f;
  }
  if (prefix.size() != 2 || !prefix[0].first || prefix[1].first) {
    throw InvariantViolation("a cnf matrix requires the prefix forall/exists");
  }
  Qbf2 f{prefix[0].second, prefix[1].second, std::move(rows)};
  validate(f);
  return f;
}

// ---------------------------------------------------------------------------
// Truth-table validity oracles

namespace {

struct MatrixMasks {
  // One (pos, neg) pair per term/clause over variable bit positions.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rows;
};

MatrixMasks lower_matrix(const std::vector<std::vector<QbfLit>>& rows,
                         const std::map<std::string, int>& var_bit) {
  MatrixMasks m;
  for (const auto& row : rows) {
    std::uint32_t pos = 0, neg = 0;
    for (const QbfLit& lit : row) {
      const std::uint32_t bit = 1u << var_bit.at(lit.var);
      (lit.negated ? neg : pos) |= bit;
    }
    m.rows.push_back({pos, neg});
  }
  return m;
}

bool dnf_satisfied(const MatrixMasks& m, std::uint32_t assignment) {
  for (auto [pos, neg] : m.rows) {
    if ((assignment & pos) == pos && (assignment & neg) == 0) return true;
  }
  return false;
}

bool cnf_satisfied(const MatrixMasks& m, std::uint32_t assignment) {
  for (auto [pos, neg] : m.rows) {
    if ((assignment & pos) == 0 && (~assignment & neg) == 0) return false;
  }
  return true;
}

std::map<std::string, int> assign_bits(const std::vector<const std::vector<std::string>*>& blocks) {
  std::map<std::string, int> var_bit;
  int next = 0;
  for (const auto* block : blocks) {
    for (const auto& v : *block) var_bit[v] = next++;
  }
  return var_bit;
}

}  // namespace

bool qbf3_valid(const Qbf3& f) {
  validate(f);
  const auto nx = static_cast<std::uint32_t>(f.x_vars.size());
  const auto ny = static_cast<std::uint32_t>(f.y_vars.size());
  const auto nz = static_cast<std::uint32_t>(f.z_vars.size());
  if (nx + ny + nz > kQbfVarGuard) throw GuardExceeded(nx + ny + nz, kQbfVarGuard);

  const auto var_bit = assign_bits({&f.x_vars, &f.y_vars, &f.z_vars});
  const MatrixMasks m = lower_matrix(f.terms, var_bit);

  for (std::uint32_t ax = 0; ax < (1u << nx); ++ax) {
    bool some_y = false;
    for (std::uint32_t ay = 0; ay < (1u << ny) && !some_y; ++ay) {
      bool all_z = true;
      for (std::uint32_t az = 0; az < (1u << nz); ++az) {
        const std::uint32_t assignment = ax | (ay << nx) | (az << (nx + ny));
        if (!dnf_satisfied(m, assignment)) {
          all_z = false;
          break;
        }
      }
      some_y = all_z;
    }
    if (!some_y) return false;
  }
  return true;
}

bool qbf2_valid(const Qbf2& f) {
  validate(f);
  const auto nx = static_cast<std::uint32_t>(f.x_vars.size());
  const auto ny = static_cast<std::uint32_t>(f.y_vars.size());
  if (nx + ny > kQbfVarGuard) throw GuardExceeded(nx + ny, kQbfVarGuard);

  const auto var_bit = assign_bits({&f.x_vars, &f.y_vars});
  const MatrixMasks m = lower_matrix(f.clauses, var_bit);

  for (std::uint32_t ax = 0; ax < (1u << nx); ++ax) {
    bool some_y = false;
    for (std::uint32_t ay = 0; ay < (1u << ny) && !some_y; ++ay) {
      some_y = cnf_satisfied(m, ax | (ay << nx));
    }
    if (!some_y) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Encoders

namespace {

std::string bar_name(const std::string& var) { return "_n_" + var; }

Rule make_rule(std::vector<AtomId> head, std::vector<AtomId> pos,
               std::vector<AtomId> neg = {}) {
  Rule r{std::move(head), std::move(pos), std::move(neg)};
  normalize_rule(r);
  return r;
}

}  // namespace

Program encode_disjunctive(const Qbf3& f) {
  validate(f);
  Program p;
  std::map<std::string, AtomId> atom, bar;
  for (const auto* block : {&f.x_vars, &f.y_vars, &f.z_vars}) {
    for (const auto& v : *block) atom[v] = p.atoms.intern(v);
  }
  for (const auto* block : {&f.x_vars, &f.y_vars, &f.z_vars}) {
    for (const auto& v : *block) bar[v] = p.atoms.intern(bar_name(v));
  }
  const AtomId u = p.atoms.intern("_u");
  const AtomId v = p.atoms.intern("_v");
  const AtomId w = p.atoms.intern("_w");

  for (const auto& xv : f.x_vars) {
    const AtomId x = atom[xv], xb = bar[xv];
    p.rules.push_back(make_rule({x, xb}, {}));
    p.rules.push_back(make_rule({u}, {x, xb}));
    p.rules.push_back(make_rule({w}, {x, xb}));
    p.rules.push_back(make_rule({x}, {u, w}));
    p.rules.push_back(make_rule({xb}, {u, w}));
  }
  for (const auto& yv : f.y_vars) {
    const AtomId y = atom[yv], yb = bar[yv];
    p.rules.push_back(make_rule({y, yb}, {v}));
    p.rules.push_back(make_rule({u}, {y, yb}));
    p.rules.push_back(make_rule({w}, {y, yb}));
    p.rules.push_back(make_rule({y}, {u, w}));
    p.rules.push_back(make_rule({yb}, {u, w}));
    p.rules.push_back(make_rule({v}, {y}));
    p.rules.push_back(make_rule({v}, {yb}));
  }
  for (const auto& zv : f.z_vars) {
    const AtomId z = atom[zv], zb = bar[zv];
    p.rules.push_back(make_rule({z, zb}, {v}));
    p.rules.push_back(make_rule({u}, {z}, {w}));
    p.rules.push_back(make_rule({u}, {zb}, {w}));
    p.rules.push_back(make_rule({v}, {z}));
    p.rules.push_back(make_rule({v}, {zb}));
    p.rules.push_back(make_rule({z}, {w}));
    p.rules.push_back(make_rule({zb}, {w}));
    p.rules.push_back(make_rule({z}, {u}));
    p.rules.push_back(make_rule({zb}, {u}));
    p.rules.push_back(make_rule({w, u}, {z, zb}));
  }
  for (const auto& term : f.terms) {
    std::vector<AtomId> body;
    for (const QbfLit& lit : term) {
      body.push_back(lit.negated ? bar[lit.var] : atom[lit.var]);
    }
    p.rules.push_back(make_rule({w, u}, std::move(body)));
  }
  p.rules.push_back(make_rule({v}, {w}));
  p.rules.push_back(make_rule({v}, {u}));
  p.rules.push_back(make_rule({v}, {}, {u}));
  return p;
}

Program encode_normal(const Qbf2& f) {
  validate(f);
  Program p;
  std::map<std::string, AtomId> atom, bar;
  for (const auto* block : {&f.x_vars, &f.y_vars}) {
    for (const auto& v : *block) atom[v] = p.atoms.intern(v);
  }
  for (const auto* block : {&f.x_vars, &f.y_vars}) {
    for (const auto& v : *block) bar[v] = p.atoms.intern(bar_name(v));
  }
  const AtomId v = p.atoms.intern("_v");
  const AtomId w = p.atoms.intern("_w");

  for (const auto& xv : f.x_vars) {
    p.rules.push_back(make_rule({atom[xv]}, {}, {bar[xv]}));
    p.rules.push_back(make_rule({bar[xv]}, {}, {atom[xv]}));
  }
  for (const auto& yv : f.y_vars) {
    p.rules.push_back(make_rule({atom[yv]}, {w}, {bar[yv]}));
    p.rules.push_back(make_rule({bar[yv]}, {w}, {atom[yv]}));
    p.rules.push_back(make_rule({w}, {atom[yv]}));
    p.rules.push_back(make_rule({w}, {bar[yv]}));
  }
  // targets: X, then the X complements, then _v, _w
  std::vector<AtomId> targets;
  for (const auto& xv : f.x_vars) targets.push_back(atom[xv]);
  for (const auto& xv : f.x_vars) targets.push_back(bar[xv]);
  targets.push_back(v);
  targets.push_back(w);
  for (const AtomId t : targets) {
    p.rules.push_back(make_rule({t}, {v, w}));
    for (const auto& xv : f.x_vars) p.rules.push_back(make_rule({t}, {atom[xv], bar[xv]}));
    for (const auto& yv : f.y_vars) p.rules.push_back(make_rule({t}, {atom[yv], bar[yv]}));
  }
  for (const auto& clause : f.clauses) {
    std::vector<AtomId> body;
    for (const QbfLit& lit : clause) {
      body.push_back(lit.negated ? atom[lit.var] : bar[lit.var]);
    }
    p.rules.push_back(make_rule({v}, std::move(body)));
  }
  p.rules.push_back(make_rule({w}, {}, {v}));
  return p;
}

// ---------------------------------------------------------------------------
// Structural verifiers

namespace {

struct VarBits {
  std::vector<std::uint32_t> plain;  // bit of variable i
  std::vector<std::uint32_t> bar;    // bit of its complement atom
  std::uint32_t plain_mask = 0, bar_mask = 0;
};

// Resolves each block variable and its complement atom to program atom ids.
VarBits resolve_block(const std::vector<std::string>& vars, const AtomTable& table) {
  VarBits out;
  for (const auto& v : vars) {
    const auto id = table.find(v);
    const auto bid = table.find(bar_name(v));
    if (!id || !bid) {
      throw UniverseMismatch("program lacks atoms for variable '" + v + "'");
    }
    out.plain.push_back(1u << *id);
    out.bar.push_back(1u << *bid);
    out.plain_mask |= 1u << *id;
    out.bar_mask |= 1u << *bid;
  }
  return out;
}

// bar bits of the variables of `vars` NOT selected by subset (a submask of
// vars.plain_mask): the complement-side encoding of an assignment.
std::uint32_t bar_of_unselected(const VarBits& vars, std::uint32_t subset) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < vars.plain.size(); ++i) {
    if ((subset & vars.plain[i]) == 0) out |= vars.bar[i];
  }
  return out;
}

AtomId require_atom(const AtomTable& table, const std::string& name) {
  const auto id = table.find(name);
  if (!id) throw UniverseMismatch("program lacks the '" + name + "' atom");
  return *id;
}

void check_exact_universe(const Program& p, std::uint32_t expected_mask,
                          std::uint32_t max_atoms) {
  const auto n = static_cast<std::uint32_t>(std::popcount(expected_mask));
  if (n > max_atoms) throw GuardExceeded(n, max_atoms);
  const std::vector<AtomId> at = atoms_of(p);
  std::uint32_t at_mask = 0;
  for (AtomId a : at) at_mask |= 1u << a;
  if (at_mask != expected_mask) {
    throw UniverseMismatch("program atoms differ from the required universe");
  }
}

using ModelSet = std::set<std::uint32_t>;

ModelSet models_among_subsets(const std::vector<kernel::RuleMask>& rules,
                              std::uint32_t domain) {
  ModelSet models;
  detail::scan_models(rules, domain, 0, kernel::active_backend(), [&](std::uint32_t m) {
    models.insert(m);
    return true;
  });
  return models;
}

struct ViolationSink {
  const AtomTable& table;
  std::uint32_t table_size;
  struct Entry {
    std::string item;
    std::uint32_t bits;
    std::string detail;
  };
  std::vector<Entry> entries;

  void expect_equal(const char* item, const ModelSet& expected, const ModelSet& found,
                    const std::string& what) {
    std::set<std::uint32_t> all(expected.begin(), expected.end());
    all.insert(found.begin(), found.end());
    for (std::uint32_t m : all) {
      const bool e = expected.count(m) != 0;
      const bool g = found.count(m) != 0;
      if (e == g) continue;
      entries.push_back(
          Entry{item, m, e ? "expected " + what + " is absent" : "unexpected " + what});
    }
  }

  void property_failed(const std::string& item, std::uint32_t m, const std::string& detail) {
    entries.push_back(Entry{item, m, detail});
  }

  // Violations ordered by (item, interpretation value), duplicates dropped.
  std::vector<ReductionViolation> finish() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      if (a.item != b.item) return a.item < b.item;
      if (a.bits != b.bits) return a.bits < b.bits;
      return a.detail < b.detail;
    });
    std::vector<ReductionViolation> out;
    for (const Entry& e : entries) {
      if (!out.empty() && out.back().item == e.item && e.detail == out.back().detail &&
          interpretation_names(Interpretation{e.bits, table_size}, table) ==
              out.back().interpretation) {
        continue;
      }
      out.push_back(ReductionViolation{
          e.item, interpretation_names(Interpretation{e.bits, table_size}, table),
          e.detail});
    }
    return out;
  }
};

}  // namespace

ReductionReport verify_phi_reduction(const Program& p, const Qbf3& f,
                                     const VerifyOptions& opts) {
  validate(f);
  const VarBits X = resolve_block(f.x_vars, p.atoms);
  const VarBits Y = resolve_block(f.y_vars, p.atoms);
  const VarBits Z = resolve_block(f.z_vars, p.atoms);
  const std::uint32_t u = 1u << require_atom(p.atoms, "_u");
  const std::uint32_t v = 1u << require_atom(p.atoms, "_v");
  const std::uint32_t w = 1u << require_atom(p.atoms, "_w");

  const std::uint32_t universe = X.plain_mask | X.bar_mask | Y.plain_mask | Y.bar_mask |
                                 Z.plain_mask | Z.bar_mask | u | v | w;
  check_exact_universe(p, universe, opts.max_atoms);
  const detail::MaskProgram mp = detail::lower(p);

  // Matrix evaluation over variable sets: assignment has variable bits of
  // I, J, K true. The evaluator mirrors the one behind qbf3_valid but works
  // directly on atom bits.
  std::map<std::string, int> var_bit;
  {
    int next = 0;
    for (const auto* block : {&f.x_vars, &f.y_vars, &f.z_vars}) {
      for (const auto& var : *block) var_bit[var] = next++;
    }
  }
  const MatrixMasks matrix = lower_matrix(f.terms, var_bit);
  auto to_assignment = [&](std::uint32_t atom_bits) {
    std::uint32_t a = 0;
    int next = 0;
    for (const VarBits* blk : {&X, &Y, &Z}) {
      for (std::uint32_t bit : blk->plain) {
        if (atom_bits & bit) a |= 1u << next;
        ++next;
      }
    }
    return a;
  };

  // Canonical interpretation families.
  auto zed = Z.plain_mask | Z.bar_mask;
  auto model_of = [&](std::uint32_t I, std::uint32_t J, bool primed) {
    const std::uint32_t base =
        I | bar_of_unselected(X, I) | J | bar_of_unselected(Y, J) | zed | v;
    return primed ? base | w : base | u;
  };
  auto o_of = [&](std::uint32_t I) { return I | bar_of_unselected(X, I); };
  auto n_of = [&](std::uint32_t I, std::uint32_t J, std::uint32_t K) {
    return I | bar_of_unselected(X, I) | J | bar_of_unselected(Y, J) | K |
           bar_of_unselected(Z, K) | v;
  };

  ViolationSink sink{p.atoms, p.atoms.size(), {}};

  // Item 2: the models of p are exactly U, M[I,J], M'[I,J].
  ModelSet expected_models{universe};
  for (std::uint32_t I = X.plain_mask;; I = (I - 1) & X.plain_mask) {
    for (std::uint32_t J = Y.plain_mask;; J = (J - 1) & Y.plain_mask) {
      expected_models.insert(model_of(I, J, false));
      expected_models.insert(model_of(I, J, true));
      if (J == 0) break;
    }
    if (I == 0) break;
  }
  sink.expect_equal("2", expected_models, models_among_subsets(mp.rules, universe),
                    "model");

  // Items 3 and 4: reduct models below M[I,J] and M'[I,J].
  std::vector<kernel::RuleMask> red;
  for (std::uint32_t I = X.plain_mask;; I = (I - 1) & X.plain_mask) {
    for (std::uint32_t J = Y.plain_mask;; J = (J - 1) & Y.plain_mask) {
      const std::uint32_t m = model_of(I, J, false);
      detail::reduct_masks(mp.rules, m, red);
      sink.expect_equal("3", ModelSet{m, o_of(I)}, models_among_subsets(red, m),
                        "model of the reduct below M[I,J]");

      const std::uint32_t mp_ = model_of(I, J, true);
      detail::reduct_masks(mp.rules, mp_, red);
      ModelSet expected{mp_};
      for (std::uint32_t K = Z.plain_mask;; K = (K - 1) & Z.plain_mask) {
        if (!dnf_satisfied(matrix, to_assignment(I | J | K))) {
          expected.insert(n_of(I, J, K));
        }
        if (K == 0) break;
      }
      sink.expect_equal("4", expected, models_among_subsets(red, mp_),
                        "model of the reduct below M'[I,J]");
      if (J == 0) break;
    }
    if (I == 0) break;
  }

  // Item 5: reduct models below U.
  {
    detail::reduct_masks(mp.rules, universe, red);
    ModelSet expected = expected_models;
    for (std::uint32_t I = X.plain_mask;; I = (I - 1) & X.plain_mask) {
      expected.insert(o_of(I));
      for (std::uint32_t J = Y.plain_mask;; J = (J - 1) & Y.plain_mask) {
        for (std::uint32_t K = Z.plain_mask;; K = (K - 1) & Z.plain_mask) {
          if (!dnf_satisfied(matrix, to_assignment(I | J | K))) {
            expected.insert(n_of(I, J, K));
          }
          if (K == 0) break;
        }
        if (J == 0) break;
      }
      if (I == 0) break;
    }
    sink.expect_equal("5", expected, models_among_subsets(red, universe),
                      "model of the reduct below U");
  }

  auto violations = sink.finish();
  return ReductionReport{violations.empty(), std::move(violations)};
}

ReductionReport verify_phi_norm_reduction(const Program& p, const Qbf2& f,
                                          const VerifyOptions& opts) {
  validate(f);
  const VarBits X = resolve_block(f.x_vars, p.atoms);
  const VarBits Y = resolve_block(f.y_vars, p.atoms);
  const std::uint32_t v = 1u << require_atom(p.atoms, "_v");
  const std::uint32_t w = 1u << require_atom(p.atoms, "_w");

  const std::uint32_t universe =
      X.plain_mask | X.bar_mask | Y.plain_mask | Y.bar_mask | v | w;
  check_exact_universe(p, universe, opts.max_atoms);
  const detail::MaskProgram mp = detail::lower(p);

  std::map<std::string, int> var_bit;
  {
    int next = 0;
    for (const auto* block : {&f.x_vars, &f.y_vars}) {
      for (const auto& var : *block) var_bit[var] = next++;
    }
  }
  const MatrixMasks matrix = lower_matrix(f.clauses, var_bit);
  auto to_assignment = [&](std::uint32_t atom_bits) {
    std::uint32_t a = 0;
    int next = 0;
    for (const VarBits* blk : {&X, &Y}) {
      for (std::uint32_t bit : blk->plain) {
        if (atom_bits & bit) a |= 1u << next;
        ++next;
      }
    }
    return a;
  };

  auto m_of = [&](std::uint32_t I) { return I | bar_of_unselected(X, I) | v; };
  auto n_of = [&](std::uint32_t I, std::uint32_t J) {
    return I | bar_of_unselected(X, I) | J | bar_of_unselected(Y, J) | w;
  };

  // Atom bits of the complemented literals of each clause.
  std::map<std::string, std::pair<std::uint32_t, std::uint32_t>> lit_bits;  // (plain, bar)
  for (std::size_t i = 0; i < f.x_vars.size(); ++i) {
    lit_bits[f.x_vars[i]] = {X.plain[i], X.bar[i]};
  }
  for (std::size_t i = 0; i < f.y_vars.size(); ++i) {
    lit_bits[f.y_vars[i]] = {Y.plain[i], Y.bar[i]};
  }
  std::vector<std::uint32_t> clause_complement(f.clauses.size(), 0);
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    for (const QbfLit& lit : f.clauses[c]) {
      const auto [plain, bar] = lit_bits.at(lit.var);
      clause_complement[c] |= lit.negated ? plain : bar;
    }
  }
  const std::uint32_t ys = Y.plain_mask | Y.bar_mask;
  // J* covers Y when it has y or its complement for every y.
  auto covers_y = [&](std::uint32_t jstar) {
    for (std::size_t i = 0; i < Y.plain.size(); ++i) {
      if ((jstar & (Y.plain[i] | Y.bar[i])) == 0) return false;
    }
    return true;
  };
  auto o_of = [&](std::uint32_t jstar) {
    return X.plain_mask | X.bar_mask | jstar | v | w;
  };

  ViolationSink sink{p.atoms, p.atoms.size(), {}};

  // Item 2: exact model set.
  ModelSet expected_models;
  for (std::uint32_t jstar = ys;; jstar = (jstar - 1) & ys) {
    if (covers_y(jstar)) expected_models.insert(o_of(jstar));
    if (jstar == 0) break;
  }
  for (std::uint32_t I = X.plain_mask;; I = (I - 1) & X.plain_mask) {
    expected_models.insert(m_of(I));
    for (std::uint32_t J = Y.plain_mask;; J = (J - 1) & Y.plain_mask) {
      if (cnf_satisfied(matrix, to_assignment(I | J))) expected_models.insert(n_of(I, J));
      if (J == 0) break;
    }
    if (I == 0) break;
  }
  sink.expect_equal("2", expected_models, models_among_subsets(mp.rules, universe),
                    "model");

  // Item 3: reduct models below M[I] and N[I,J].
  std::vector<kernel::RuleMask> red;
  for (std::uint32_t I = X.plain_mask;; I = (I - 1) & X.plain_mask) {
    const std::uint32_t m = m_of(I);
    detail::reduct_masks(mp.rules, m, red);
    sink.expect_equal("3", ModelSet{m, m & ~v}, models_among_subsets(red, m),
                      "model of the reduct below M[I]");
    for (std::uint32_t J = Y.plain_mask;; J = (J - 1) & Y.plain_mask) {
      if (cnf_satisfied(matrix, to_assignment(I | J))) {
        const std::uint32_t n = n_of(I, J);
        detail::reduct_masks(mp.rules, n, red);
        sink.expect_equal("3", ModelSet{n}, models_among_subsets(red, n),
                          "model of the reduct below N[I,J]");
      }
      if (J == 0) break;
    }
    if (I == 0) break;
  }

  // Item 4: every reduct model below O[J*] satisfies properties (a)-(e).
  for (std::uint32_t jstar = 0;; jstar = kernel::next_subset(jstar, ys)) {
    if (covers_y(jstar)) {
      const std::uint32_t o = o_of(jstar);
      detail::reduct_masks(mp.rules, o, red);
      detail::scan_models(red, o, 0, kernel::active_backend(), [&](std::uint32_t m) {
        for (std::size_t i = 0; i < Y.plain.size(); ++i) {
          const std::uint32_t y = Y.plain[i], yb = Y.bar[i];
          if ((o & y) && !(o & yb) && (m & w) && !(m & y)) {
            sink.property_failed("4a", m, "w holds but " + f.y_vars[i] + " does not");
          }
          if ((o & yb) && !(o & y) && (m & w) && !(m & yb)) {
            sink.property_failed("4b", m,
                                 "w holds but the complement of " + f.y_vars[i] +
                                     " does not");
          }
        }
        if ((m & ys) != 0 && !(m & w)) {
          sink.property_failed("4c", m, "a Y-side atom holds but w does not");
        }
        for (std::size_t c = 0; c < f.clauses.size(); ++c) {
          if ((m & clause_complement[c]) == clause_complement[c] && !(m & v)) {
            sink.property_failed("4d", m,
                                 "clause " + std::to_string(c + 1) +
                                     " is violated but v does not hold");
          }
        }
        bool contradictory = (m & v) && (m & w);
        for (std::size_t i = 0; i < X.plain.size() && !contradictory; ++i) {
          contradictory = (m & X.plain[i]) && (m & X.bar[i]);
        }
        for (std::size_t i = 0; i < Y.plain.size() && !contradictory; ++i) {
          contradictory = (m & Y.plain[i]) && (m & Y.bar[i]);
        }
        const std::uint32_t saturation = X.plain_mask | X.bar_mask | v | w;
        if (contradictory && (m & saturation) != saturation) {
          sink.property_failed("4e", m,
                               "contradictory atoms hold but the X/v/w block is not "
                               "saturated");
        }
        return true;
      });
    }
    if (jstar == ys) break;
  }

  auto violations = sink.finish();
  return ReductionReport{violations.empty(), std::move(violations)};
}

}  // namespace aspsc
