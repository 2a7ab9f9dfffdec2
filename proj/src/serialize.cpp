// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#include "aspsc/serialize.hpp"

#include <json.hpp>

namespace aspsc {

namespace {

using Json = nlohmann::ordered_json;

Json names_json(const Interpretation& i, const AtomTable& table) {
  return Json(interpretation_names(i, table));
}

}  // namespace

std::string to_json(const AnswerSetReport& r) {
  Json out;
  Json sets = Json::array();
  for (const Interpretation& m : r.answer_sets) sets.push_back(names_json(m, r.universe));
  out["answer_sets"] = std::move(sets);
  out["enumerated"] = r.enumerated;
  return out.dump();
}

std::string to_json(const ClassReport& r) {
  Json out;
  out["is_normal"] = r.is_normal;
  out["is_positive"] = r.is_positive;
  out["is_stratified"] = r.is_stratified;
  out["is_odd_cycle_free"] = r.is_odd_cycle_free;
  out["is_head_cycle_free"] = r.is_head_cycle_free;
  out["is_definite_horn"] = r.is_definite_horn;
  return out.dump();
}

std::string to_json(const ScVerdict& v) {
  Json out;
  out["super_coherent"] = v.holds;
  if (v.witness) out["witness"] = names_json(*v.witness, v.universe);
  out["facts_checked"] = v.facts_checked;
  return out.dump();
}

std::string to_json(const EquivVerdict& v) {
  Json out;
  out["equivalent"] = v.holds;
  out["context"] = v.context;
  out["projection"] = v.projection;
  if (v.witness) out["witness"] = names_json(*v.witness, v.universe);
  if (v.lhs_projection) out["lhs_projection"] = *v.lhs_projection;
  if (v.rhs_projection) out["rhs_projection"] = *v.rhs_projection;
  out["facts_checked"] = v.facts_checked;
  return out.dump();
}

std::string to_json(const ReductionReport& r) {
  Json out;
  out["passed"] = r.passed;
  Json violations = Json::array();
  for (const ReductionViolation& v : r.violations) {
    Json entry;
    entry["item"] = v.item;
    entry["interpretation"] = v.interpretation;
    entry["detail"] = v.detail;
    violations.push_back(std::move(entry));
  }
  out["violations"] = std::move(violations);
  return out.dump();
}

std::string to_json(const EmbeddingArtifact& a) {
  Json out;
  out["transform"] = a.transform;
  out["program"] = render_program(a.program);
  std::vector<std::string> universe;
  for (AtomId id : a.original_universe) universe.push_back(a.program.atoms.name(id));
  std::sort(universe.begin(), universe.end());
  out["universe"] = universe;
  out["fail_atom"] = a.fail_atom ? Json(a.program.atoms.name(*a.fail_atom)) : Json(nullptr);
  out["query_atom"] =
      a.query_atom ? Json(a.program.atoms.name(*a.query_atom)) : Json(nullptr);
  out["warnings"] = a.warnings;
  return out.dump();
}

std::string to_text(const Interpretation& i, const AtomTable& table) {
  std::string out = "{";
  bool first = true;
  for (const std::string& name : interpretation_names(i, table)) {
    if (!first) out += ", ";
    first = false;
    out += name;
  }
  out += "}";
  return out;
}

}  // namespace aspsc
