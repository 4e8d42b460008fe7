// Command-line front end: solve programs, print translations, and run the
// equivalence checks against the reference semantics.

#include "eflp/eflp.hpp"
#include "eflp/io/json.hpp"
#include "eflp/theorems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using eflp::io::json;

constexpr int kExitOk = 0;
constexpr int kExitNonConvergence = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eflp::ConfigError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<eflp::TruthValue> parse_grid(const std::string& text) {
  std::vector<eflp::TruthValue> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(eflp::TruthValue::parse(item));
  return out;
}

/// Loads any dialect as a core program; foreign dialects are translated.
eflp::Program load_core(const std::string& path, eflp::Dialect dialect, bool& generated) {
  auto parsed = eflp::parse(read_file(path), dialect);
  generated = dialect != eflp::Dialect::core;
  if (auto* q = std::get_if<eflp::SaadProgram>(&parsed)) return eflp::translate_saad(*q);
  if (auto* q = std::get_if<eflp::CornejoProgram>(&parsed)) return eflp::translate_cornejo(*q);
  return std::get<eflp::Program>(parsed);
}

/// Explicit choice, else by extension: .saad, .cornejo, anything else core.
eflp::Dialect pick_dialect(const std::string& explicit_choice, const std::string& path) {
  if (!explicit_choice.empty()) return eflp::parse_dialect(explicit_choice);
  if (path.ends_with(".saad")) return eflp::Dialect::saad;
  if (path.ends_with(".cornejo")) return eflp::Dialect::cornejo;
  return eflp::Dialect::core;
}

std::string pair_text(const eflp::TruthPair& p) { return "(" + p.t.to_string() + ", " + p.f.to_string() + ")"; }

void print_interp(std::ostream& os, const eflp::ParaInterp& i, const std::string& indent) {
  for (std::size_t a = 0; a < i.size(); ++a) os << indent << i.universe()->atom(a) << " " << pair_text(i[a]) << "\n";
}

struct SolveArgs {
  std::string file;
  std::string semantics = "wf";
  std::string dialect;
  std::string grid;
  std::string interp_file;
  std::string strategy = "guess";
  std::size_t max_iter = 0;
  bool as_json = false;
  bool allow_reserved = false;
  bool off_grid = false;
};

int cmd_solve(const SolveArgs& args) {
  bool generated = false;
  auto program = load_core(args.file, pick_dialect(args.dialect, args.file), generated);
  eflp::CompiledProgram cp(program, generated || args.allow_reserved);
  std::size_t max_iter = args.max_iter ? args.max_iter : eflp::default_max_iter();
  json out;
  std::ostringstream text;
  out["semantics"] = args.semantics;

  if (args.semantics == "kk" || args.semantics == "wf") {
    auto r = args.semantics == "kk" ? eflp::kripke_kleene(cp, max_iter) : eflp::well_founded(cp, max_iter);
    out["lower"] = eflp::io::to_json(r.value.lower);
    out["upper"] = eflp::io::to_json(r.value.upper);
    out["exact"] = r.value.exact();
    out["iterations"] = r.applications;
    text << (args.semantics == "kk" ? "Kripke-Kleene" : "well-founded") << " fixpoint"
         << (r.value.exact() ? " (exact)" : "") << ", " << r.applications << " iteration"
         << (r.applications == 1 ? "" : "s") << "\n";
    for (std::size_t a = 0; a < r.value.lower.size(); ++a)
      text << "  " << cp.universe()->atom(a) << " lower " << pair_text(r.value.lower[a]) << " upper "
           << pair_text(r.value.upper[a]) << "\n";
  } else if (args.semantics == "stable") {
    auto grid = args.grid.empty() ? eflp::default_grid(cp) : parse_grid(args.grid);
    eflp::SearchOptions options;
    options.max_iter = max_iter;
    options.restrict_to_grid = !args.off_grid;
    if (args.strategy == "brute")
      options.strategy = eflp::SearchStrategy::brute_force;
    else if (args.strategy != "guess")
      throw eflp::ConfigError("unknown strategy '" + args.strategy + "'");
    auto models = eflp::enumerate_stable_models(cp, grid, options);
    out["grid"] = eflp::io::to_json(grid);
    out["models"] = eflp::io::to_json(models);
    json consistent = json::array();
    for (const auto& m : models) consistent.push_back(eflp::is_consistent(m, cp.config()));
    out["consistent"] = consistent;
    out["count"] = models.size();
    text << models.size() << " stable model" << (models.size() == 1 ? "" : "s");
    if (options.restrict_to_grid && !cp.config().lattice().is_finite()) {
      text << " with degrees in {";
      for (std::size_t i = 0; i < grid.size(); ++i) text << (i ? ", " : "") << grid[i].to_string();
      text << "}";
    }
    text << "\n";
    for (std::size_t i = 0; i < models.size(); ++i) {
      text << "model " << i + 1 << (eflp::is_consistent(models[i], cp.config()) ? "" : " (inconsistent)") << "\n";
      print_interp(text, models[i], "  ");
    }
  } else if (args.semantics == "model-check") {
    if (args.interp_file.empty()) throw eflp::ConfigError("model-check needs --interp FILE");
    json j;
    try {
      j = json::parse(read_file(args.interp_file));
    } catch (const json::parse_error& e) {
      throw eflp::ConfigError(std::string("malformed interpretation JSON: ") + e.what());
    }
    auto interp = eflp::io::interp_from_json(j, cp.universe());
    auto report = eflp::consistency(interp, cp.config());
    bool model = eflp::is_model(cp, interp);
    bool stable = eflp::is_stable_model(cp, interp, max_iter);
    out["model"] = model;
    out["stable"] = stable;
    out["consistent"] = report.consistent;
    out["inconsistent_atoms"] = report.violating_atoms;
    text << "model: " << (model ? "yes" : "no") << "\nstable: " << (stable ? "yes" : "no")
         << "\nconsistent: " << (report.consistent ? "yes" : "no") << "\n";
  } else {
    throw eflp::ConfigError("unknown semantics '" + args.semantics + "'");
  }

  if (args.as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return kExitOk;
}

int cmd_translate(const std::string& file, const std::string& from) {
  auto dialect = eflp::parse_dialect(from);
  if (dialect == eflp::Dialect::core) throw eflp::ConfigError("--from must be saad or cornejo");
  bool generated = false;
  std::cout << eflp::to_text(load_core(file, dialect, generated));
  return kExitOk;
}

struct CompareArgs {
  std::string check;
  std::string file;
  std::size_t random = 0;
  std::uint64_t seed = 1;
};

int cmd_oracle_compare(const CompareArgs& args) {
  auto check = eflp::parse_check(args.check);
  json out;
  if (args.file.empty()) {
    if (args.random == 0) throw eflp::ConfigError("give a FILE or --random N");
    out = eflp::run_corpus(check, args.random, args.seed).to_json();
  } else {
    auto text = read_file(args.file);
    eflp::CaseOutcome outcome;
    switch (check) {
      case eflp::Check::wf_sakama:
        outcome = eflp::check_wf_sakama(eflp::parse_program(text));
        break;
      case eflp::Check::stable_reduct:
        outcome = eflp::check_stable_reduct(eflp::parse_program(text));
        break;
      case eflp::Check::saad:
        outcome = eflp::check_saad(eflp::parse_saad(text));
        break;
      case eflp::Check::cornejo:
        outcome = eflp::check_cornejo(eflp::parse_cornejo(text));
        break;
      case eflp::Check::normal: {
        eflp::gen::Rng rng(args.seed);
        outcome = eflp::check_normal(eflp::parse_program(text), rng, 20);
        break;
      }
    }
    out = {{"check", args.check},
           {"cases", 1},
           {"agreements", outcome.agree ? 1 : 0},
           {"divergences", outcome.agree ? 0 : 1},
           {"detail", outcome.detail}};
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kripke-Kleene, well-founded and stable semantics for extended fuzzy logic programs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a semantics of a program");
  solve_cmd->add_option("file", solve.file, "Program file")->required();
  solve_cmd->add_option("--semantics", solve.semantics, "kk, wf, stable or model-check")
      ->check(CLI::IsMember({"kk", "wf", "stable", "model-check"}));
  solve_cmd->add_option("--dialect", solve.dialect, "core, saad or cornejo (default: by file extension)")
      ->check(CLI::IsMember({"core", "saad", "cornejo"}));
  solve_cmd->add_option("--max-iter", solve.max_iter, "Iteration budget (default: EFLP_MAX_ITER or 10000)");
  solve_cmd->add_option("--grid", solve.grid, "Comma-separated degrees searched for stable models");
  solve_cmd->add_option("--strategy", solve.strategy, "Stable model search: guess or brute")
      ->check(CLI::IsMember({"guess", "brute"}));
  solve_cmd->add_flag("--off-grid", solve.off_grid, "Keep stable models with degrees outside the grid");
  solve_cmd->add_option("--interp", solve.interp_file, "JSON interpretation for model-check");
  solve_cmd->add_flag("--json", solve.as_json, "Print JSON");
  solve_cmd->add_flag("--allow-reserved", solve.allow_reserved, "Accept atoms starting with '@'");

  std::string translate_file, translate_from;
  auto* translate_cmd = app.add_subcommand("translate", "Print the core program a foreign dialect translates to");
  translate_cmd->add_option("file", translate_file, "Program file")->required();
  translate_cmd->add_option("--from", translate_from, "saad or cornejo")
      ->required()
      ->check(CLI::IsMember({"saad", "cornejo"}));

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("oracle-compare", "Compare against a reference semantics");
  std::vector<std::string> check_ids;
  for (const auto& [name, c] : eflp::check_names()) check_ids.push_back(name);
  compare_cmd->add_option("--check", compare.check, "wf-sakama, stable-reduct, saad, cornejo or normal")
      ->required()
      ->check(CLI::IsMember(check_ids));
  compare_cmd->add_option("file", compare.file, "Program file");
  compare_cmd->add_option("--random", compare.random, "Number of random programs");
  compare_cmd->add_option("--seed", compare.seed, "Seed for random programs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*translate_cmd) return cmd_translate(translate_file, translate_from);
    if (*compare_cmd) return cmd_oracle_compare(compare);
  } catch (const eflp::NonConvergenceError& e) {
    std::cerr << "eflp: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "eflp: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
