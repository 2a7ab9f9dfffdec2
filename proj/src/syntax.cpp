// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace aspsc {

bool AtomTable::valid_name(std::string_view name) {
  if (name.empty()) return false;
  const char c0 = name.front();
  if (!(std::islower(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
  for (char c : name.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

AtomId AtomTable::intern(std::string_view name) {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  if (!valid_name(name)) {
    throw InvariantViolation("invalid atom name '" + std::string(name) + "'");
  }
  const AtomId id = static_cast<AtomId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void normalize_rule(Rule& r) {
  auto canon = [](std::vector<AtomId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  canon(r.head);
  canon(r.pos_body);
  canon(r.neg_body);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, col, message);
  }
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_ident(Cursor& cur) {
  const std::size_t start = cur.pos;
  while (!cur.eof() && ident_char(cur.peek())) cur.advance();
  return std::string(cur.text.substr(start, cur.pos - start));
}

AtomId parse_atom(Cursor& cur, AtomTable& table) {
  cur.skip_ws_and_comments();
  if (cur.eof()) cur.fail("expected atom, found end of input");
  const int at_line = cur.line, at_col = cur.col;
  if (!ident_start(cur.peek())) {
    cur.fail(std::string("expected atom, found '") + cur.peek() + "'");
  }
  const std::string name = read_ident(cur);
  if (name == "not") throw ParseError(at_line, at_col, "'not' is a reserved word");
  if (!AtomTable::valid_name(name)) {
    throw ParseError(at_line, at_col, "invalid atom name '" + name + "'");
  }
  return table.intern(name);
}

// literal := ["not"] atom; returns (atom, negated)
std::pair<AtomId, bool> parse_literal(Cursor& cur, AtomTable& table) {
  cur.skip_ws_and_comments();
  if (!cur.eof() && ident_start(cur.peek())) {
    Cursor probe = cur;
    const std::string word = read_ident(probe);
    if (word == "not") {
      cur = probe;
      return {parse_atom(cur, table), true};
    }
  }
  return {parse_atom(cur, table), false};
}

}  // namespace

Program parse_program(std::string_view text) {
  Program p;
  Cursor cur{text};
  for (;;) {
    cur.skip_ws_and_comments();
    if (cur.eof()) break;

    Rule rule;
    bool saw_head = false;
    bool saw_arrow = false;

    if (cur.peek() == '.') cur.fail("empty statement");

    if (cur.peek() != ':') {
      // head = atom ("|" atom)*
      saw_head = true;
      rule.head.push_back(parse_atom(cur, p.atoms));
      for (;;) {
        cur.skip_ws_and_comments();
        if (!cur.eof() && cur.peek() == '|') {
          cur.advance();
          rule.head.push_back(parse_atom(cur, p.atoms));
        } else {
          break;
        }
      }
    }

    cur.skip_ws_and_comments();
    if (!cur.eof() && cur.peek() == ':') {
      cur.advance();
      if (cur.eof() || cur.peek() != '-') cur.fail("expected ':-'");
      cur.advance();
      saw_arrow = true;

      cur.skip_ws_and_comments();
      // The headless empty rule ':-.' is admitted (an always-violated
      // constraint); an empty body after a head is not.
      const bool empty_body = !cur.eof() && cur.peek() == '.';
      if (empty_body && saw_head) cur.fail("empty rule body");
      if (!empty_body) {
        for (;;) {
          auto [atom, negated] = parse_literal(cur, p.atoms);
          (negated ? rule.neg_body : rule.pos_body).push_back(atom);
          cur.skip_ws_and_comments();
          if (!cur.eof() && cur.peek() == ',') {
            cur.advance();
          } else {
            break;
          }
        }
      }
    }

    cur.skip_ws_and_comments();
    if (cur.eof()) cur.fail("expected '.' before end of input");
    if (cur.peek() != '.') cur.fail(std::string("expected '.', found '") + cur.peek() + "'");
    cur.advance();

    if (!saw_head && !saw_arrow) cur.fail("empty statement");
    normalize_rule(rule);
    p.rules.push_back(std::move(rule));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::vector<std::string> sorted_names(const std::vector<AtomId>& ids, const AtomTable& t) {
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (AtomId id : ids) names.push_back(t.name(id));
  std::sort(names.begin(), names.end());
  return names;
}

void join_into(std::ostringstream& out, const std::vector<std::string>& parts,
               const char* sep, const char* prefix) {
  bool first = true;
  for (const auto& s : parts) {
    if (!first) out << sep;
    first = false;
    out << prefix << s;
  }
}

}  // namespace

std::string render_program(const Program& p) {
  std::ostringstream out;
  for (const Rule& r : p.rules) {
    const auto head = sorted_names(r.head, p.atoms);
    const auto pos = sorted_names(r.pos_body, p.atoms);
    const auto neg = sorted_names(r.neg_body, p.atoms);
    join_into(out, head, " | ", "");
    if (!pos.empty() || !neg.empty()) {
      if (!head.empty()) out << ' ';
      out << ":- ";
      join_into(out, pos, ", ", "");
      bool first = pos.empty();
      for (const auto& s : neg) {
        if (!first) out << ", ";
        first = false;
        out << "not " << s;
      }
    } else if (head.empty()) {
      out << ":-";  // the empty rule
    }
    out << ".\n";
  }
  return out.str();
}

std::vector<AtomId> atoms_of(const Program& p) {
  std::set<AtomId> ids;
  for (const Rule& r : p.rules) {
    ids.insert(r.head.begin(), r.head.end());
    ids.insert(r.pos_body.begin(), r.pos_body.end());
    ids.insert(r.neg_body.begin(), r.neg_body.end());
  }
  return {ids.begin(), ids.end()};
}

Program eliminate_constraints(const Program& p) {
  Program out = p;
  std::size_t next_index = 0;
  for (Rule& r : out.rules) {
    if (!r.is_constraint()) continue;
    std::string name;
    do {
      name = "_co" + std::to_string(next_index++);
    } while (out.atoms.find(name).has_value());
    const AtomId fresh = out.atoms.intern(name);
    r.head.push_back(fresh);
    r.neg_body.push_back(fresh);
    normalize_rule(r);
  }
  return out;
}

Program collapse_duplicate_rules(const Program& p) {
  Program out;
  out.atoms = p.atoms;
  std::set<Rule> seen;
  for (const Rule& r : p.rules) {
    if (seen.insert(r).second) out.rules.push_back(r);
  }
  return out;
}

bool equal_programs(const Program& a, const Program& b) {
  // Compare as sets of rules over atom *names*.
  using NamedRule = std::array<std::vector<std::string>, 3>;
  auto named_rules = [](const Program& p) {
    std::set<NamedRule> rules;
    for (const Rule& r : p.rules) {
      rules.insert(NamedRule{sorted_names(r.head, p.atoms),
                             sorted_names(r.pos_body, p.atoms),
                             sorted_names(r.neg_body, p.atoms)});
    }
    return rules;
  };
  return named_rules(a) == named_rules(b);
}

Program with_facts(const Program& p, const std::vector<AtomId>& facts) {
  Program out = p;
  std::set<Rule> existing(p.rules.begin(), p.rules.end());
  for (AtomId id : facts) {
    Rule fact{{id}, {}, {}};
    if (existing.insert(fact).second) out.rules.push_back(std::move(fact));
  }
  return out;
}

}  // namespace aspsc
