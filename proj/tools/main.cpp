// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes: decision subcommands answer with
// 0 (yes) / 1 (no); 2 flags usage, parse or input defects; 3 a refused
// enumeration guard.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aspsc/analysis.hpp"
#include "aspsc/embedding.hpp"
#include "aspsc/errors.hpp"
#include "aspsc/qbf.hpp"
#include "aspsc/semantics.hpp"
#include "aspsc/serialize.hpp"
#include "aspsc/supercoherence.hpp"
#include "aspsc/syntax.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct GlobalFlags {
  bool json = false;
  std::optional<std::uint32_t> max_atoms;
  unsigned parallel = 1;

  aspsc::SolveOptions solve() const {
    aspsc::SolveOptions o;
    if (max_atoms) o.max_atoms = *max_atoms;
    o.parallel = parallel;
    return o;
  }
  aspsc::ScOptions sc() const {
    aspsc::ScOptions o;
    if (max_atoms) o.max_atoms = *max_atoms;
    o.parallel = parallel;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw aspsc::Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> atom_names(const aspsc::Program& p) {
  std::vector<std::string> names;
  for (aspsc::AtomId id : aspsc::atoms_of(p)) names.push_back(p.atoms.name(id));
  return names;
}

int run_solve(const std::string& path, const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(path));
  const aspsc::AnswerSetReport report = aspsc::answer_sets(p, g.solve());
  if (g.json) {
    std::cout << aspsc::to_json(report) << "\n";
  } else if (report.answer_sets.empty()) {
    std::cout << "no answer sets\n";
  } else {
    for (const auto& m : report.answer_sets) {
      std::cout << aspsc::to_text(m, report.universe) << "\n";
    }
  }
  return kExitYes;
}

int run_classify(const std::string& path, const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(path));
  const aspsc::ClassReport r = aspsc::classify(p);
  if (g.json) {
    std::cout << aspsc::to_json(r) << "\n";
  } else {
    auto line = [](const char* k, bool v) { std::cout << k << ": " << (v ? "yes" : "no") << "\n"; };
    line("normal", r.is_normal);
    line("positive", r.is_positive);
    line("stratified", r.is_stratified);
    line("odd-cycle-free", r.is_odd_cycle_free);
    line("head-cycle-free", r.is_head_cycle_free);
    line("definite-horn", r.is_definite_horn);
  }
  return kExitYes;
}

int run_check_sc(const std::string& path, const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(path));
  const aspsc::ScVerdict v = aspsc::is_super_coherent(p, g.sc());
  if (g.json) {
    std::cout << aspsc::to_json(v) << "\n";
  } else if (v.holds) {
    std::cout << "super-coherent\n";
  } else {
    std::cout << "not super-coherent\n"
              << "witness: " << aspsc::to_text(*v.witness, v.universe) << "\n";
  }
  return v.holds ? kExitYes : kExitNo;
}

int run_query(const std::string& path, const std::string& atom, const std::string& mode,
              const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(path));
  const auto m = mode == "brave" ? aspsc::QueryMode::brave : aspsc::QueryMode::cautious;
  const bool result = aspsc::query(p, atom, m, g.solve());
  if (g.json) {
    std::cout << R"({"atom":")" << atom << R"(","mode":")" << mode << R"(","result":)"
              << (result ? "true" : "false") << "}\n";
  } else {
    std::cout << (result ? "true" : "false") << "\n";
  }
  return result ? kExitYes : kExitNo;
}

int run_encode(const std::string& qbf_path, const std::string& out_path,
               const GlobalFlags&) {
  const aspsc::Qbf f = aspsc::parse_qbf(read_file(qbf_path));
  const aspsc::Program p = std::holds_alternative<aspsc::Qbf3>(f)
                               ? aspsc::encode_disjunctive(std::get<aspsc::Qbf3>(f))
                               : aspsc::encode_normal(std::get<aspsc::Qbf2>(f));
  const std::string text = aspsc::render_program(p);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw aspsc::Error("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitYes;
}

int run_qbf_valid(const std::string& path, const GlobalFlags& g) {
  const aspsc::Qbf f = aspsc::parse_qbf(read_file(path));
  const bool valid = std::holds_alternative<aspsc::Qbf3>(f)
                         ? aspsc::qbf3_valid(std::get<aspsc::Qbf3>(f))
                         : aspsc::qbf2_valid(std::get<aspsc::Qbf2>(f));
  if (g.json) {
    std::cout << R"({"valid":)" << (valid ? "true" : "false") << "}\n";
  } else {
    std::cout << (valid ? "true" : "false") << "\n";
  }
  return valid ? kExitYes : kExitNo;
}

int run_verify_reduction(const std::string& prog_path, const std::string& qbf_path,
                         const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(prog_path));
  const aspsc::Qbf f = aspsc::parse_qbf(read_file(qbf_path));
  aspsc::VerifyOptions opts;
  if (g.max_atoms) opts.max_atoms = *g.max_atoms;
  const aspsc::ReductionReport report =
      std::holds_alternative<aspsc::Qbf3>(f)
          ? aspsc::verify_phi_reduction(p, std::get<aspsc::Qbf3>(f), opts)
          : aspsc::verify_phi_norm_reduction(p, std::get<aspsc::Qbf2>(f), opts);
  if (g.json) {
    std::cout << aspsc::to_json(report) << "\n";
  } else if (report.passed) {
    std::cout << "passed\n";
  } else {
    for (const auto& v : report.violations) {
      std::cout << "item " << v.item << ": " << v.detail << " at {";
      for (std::size_t i = 0; i < v.interpretation.size(); ++i) {
        std::cout << (i ? ", " : "") << v.interpretation[i];
      }
      std::cout << "}\n";
    }
  }
  return report.passed ? kExitYes : kExitNo;
}

void print_artifact(const aspsc::EmbeddingArtifact& art, const GlobalFlags& g) {
  if (g.json) {
    std::cout << aspsc::to_json(art) << "\n";
    return;
  }
  std::cout << "% transform: " << art.transform << "\n";
  if (art.fail_atom) {
    std::cout << "% fail atom: " << art.program.atoms.name(*art.fail_atom) << "\n";
  }
  if (art.query_atom) {
    std::cout << "% query atom: " << art.program.atoms.name(*art.query_atom) << "\n";
  }
  for (const auto& warning : art.warnings) std::cout << "% warning: " << warning << "\n";
  std::cout << aspsc::render_program(art.program);
}

int run_embed(const std::string& path, const std::string& transform,
              const std::string& universe_csv, const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(path));
  aspsc::StratOptions opts;
  opts.extra_universe = split_names(universe_csv);

  aspsc::EmbeddingArtifact art;
  if (transform == "strat") {
    art = aspsc::strat_transform(p, opts);
  } else if (transform == "strat-shift") {
    art = aspsc::strat_shift(p, opts);
  } else {  // shift
    aspsc::ShiftResult shifted = aspsc::shift_transform(p);
    art.program = std::move(shifted.program);
    art.original_universe = aspsc::atoms_of(p);
    art.transform = "shift";
    if (!shifted.input_head_cycle_free) {
      art.warnings.push_back(
          "input is not head-cycle-free: answer sets are not guaranteed to be preserved");
    }
  }
  print_artifact(art, g);
  return kExitYes;
}

int run_embed_query(const std::string& path, const std::string& atom,
                    const std::string& mode, const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(path));
  const aspsc::EmbeddingArtifact art = mode == "brave"
                                           ? aspsc::embed_brave_query(p, atom)
                                           : aspsc::embed_cautious_query(p, atom);
  print_artifact(art, g);
  return kExitYes;
}

int run_equiv(const std::string& p_path, const std::string& q_path,
              const std::string& context_csv, const std::string& project_csv,
              bool context_given, const GlobalFlags& g) {
  const aspsc::Program p = aspsc::parse_program(read_file(p_path));
  const aspsc::Program q = aspsc::parse_program(read_file(q_path));
  std::vector<std::string> context = split_names(context_csv);
  if (!context_given) {
    context = atom_names(p);
    for (const auto& name : atom_names(q)) {
      if (std::find(context.begin(), context.end(), name) == context.end()) {
        context.push_back(name);
      }
    }
  }
  const aspsc::EquivVerdict v =
      aspsc::projected_uniform_equiv(p, q, context, split_names(project_csv), g.sc());
  if (g.json) {
    std::cout << aspsc::to_json(v) << "\n";
  } else if (v.holds) {
    std::cout << "equivalent\n";
  } else {
    std::cout << "not equivalent\n"
              << "witness: " << aspsc::to_text(*v.witness, v.universe) << "\n";
  }
  return v.holds ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"super-coherence toolkit for propositional answer set programs"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--max-atoms", g.max_atoms,
                 "override the enumeration guard (exponential runtime!)");
  app.add_option("--parallel", g.parallel, "worker threads for enumeration loops")
      ->check(CLI::PositiveNumber);

  std::string file, file2, atom, mode = "brave", out_path, transform = "strat";
  std::string universe_csv, context_csv, project_csv;

  auto* solve = app.add_subcommand("solve", "enumerate all answer sets");
  solve->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "report syntactic program classes");
  classify->add_option("file", file)->required();

  auto* check_sc = app.add_subcommand(
      "check-sc", "decide super-coherence (exit 0 holds, 1 refuted)");
  check_sc->add_option("file", file)->required();

  auto* query = app.add_subcommand("query", "brave or cautious atom query");
  query->add_option("file", file)->required();
  query->add_option("atom", atom)->required();
  query->add_option("--mode", mode)->check(CLI::IsMember({"brave", "cautious"}));

  auto* encode = app.add_subcommand("encode", "encode a QBF as a program");
  encode->add_option("file", file)->required();
  encode->add_option("-o,--output", out_path, "output program file (default stdout)");

  auto* qbf_valid = app.add_subcommand("qbf-valid", "decide QBF validity by enumeration");
  qbf_valid->add_option("file", file)->required();

  auto* verify = app.add_subcommand(
      "verify-reduction", "check the reduction model structure of a program");
  verify->add_option("program", file)->required();
  verify->add_option("qbf", file2)->required();

  auto* embed = app.add_subcommand("embed", "super-coherence-preserving transform");
  embed->add_option("file", file)->required();
  embed->add_option("--transform", transform)
      ->check(CLI::IsMember({"strat", "shift", "strat-shift"}));
  embed->add_option("--universe", universe_csv, "extra universe atoms (comma-separated)");

  auto* embed_query = app.add_subcommand("embed-query", "query embedding over strat");
  embed_query->add_option("file", file)->required();
  embed_query->add_option("atom", atom)->required();
  embed_query->add_option("--mode", mode)->check(CLI::IsMember({"brave", "cautious"}));

  auto* equiv = app.add_subcommand("equiv", "uniform equivalence with projection");
  equiv->add_option("p", file)->required();
  equiv->add_option("q", file2)->required();
  auto* context_opt =
      equiv->add_option("--context", context_csv, "fact alphabet (default: all atoms)");
  equiv->add_option("--project", project_csv, "projection alphabet (default: empty)");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(file, g);
    if (classify->parsed()) return run_classify(file, g);
    if (check_sc->parsed()) return run_check_sc(file, g);
    if (query->parsed()) return run_query(file, atom, mode, g);
    if (encode->parsed()) return run_encode(file, out_path, g);
    if (qbf_valid->parsed()) return run_qbf_valid(file, g);
    if (verify->parsed()) return run_verify_reduction(file, file2, g);
    if (embed->parsed()) return run_embed(file, transform, universe_csv, g);
    if (embed_query->parsed()) return run_embed_query(file, atom, mode, g);
    if (equiv->parsed()) {
      return run_equiv(file, file2, context_csv, project_csv, context_opt->count() > 0, g);
    }
  } catch (const aspsc::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --max-atoms to override)\n";
    return kExitGuard;
  } catch (const aspsc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const aspsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
