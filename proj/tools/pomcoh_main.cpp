// Command line front end: correctness checking, interpretation, property
// suites and dicograph export.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pomcoh/flag.hpp"
#include "pomcoh/proofnet.hpp"
#include "pomcoh/space_text.hpp"
#include "pomcoh/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string format = "text";
  int tree_depth = 2;
  std::size_t web_cap = 8;
  std::size_t circuit_cap = 20;
  unsigned seed = 20260811;
  std::vector<std::string> catalog;

  bool machine() const { return format == "machine"; }
  pomcoh::SuiteConfig suite_config() const {
    pomcoh::SuiteConfig cfg;
    cfg.tree_depth = tree_depth;
    cfg.web_cap = web_cap;
    cfg.circuit_cap = circuit_cap;
    cfg.seed = seed;
    cfg.catalog = catalog;
    return cfg;
  }
};

int cmd_check(const std::string& file, const Options& opt, bool dot) {
  const pomcoh::ProofStructure ps = pomcoh::parse_structure_text(slurp(file));
  if (dot) std::cout << pomcoh::structure_dot(ps);
  const pomcoh::Verdict v = pomcoh::check_correctness(ps, opt.circuit_cap);
  if (v.correct) {
    if (opt.machine())
      std::cout << "correct\tPASS\t\n";
    else
      std::cout << "PASS\n";
    return kExitPass;
  }
  if (opt.machine())
    std::cout << "correct\tFAIL\t" << v.circuit_display(ps) << "\n";
  else
    std::cout << "FAIL chordless ae-circuit: " << v.circuit_display(ps) << "\n";
  return kExitFail;
}

int cmd_interpret(const std::string& file, const std::string& atoms,
                  const Options& opt) {
  const pomcoh::ProofStructure ps = pomcoh::parse_structure_text(slurp(file));
  const pomcoh::SpaceFile spaces = pomcoh::parse_space_file(slurp(atoms));

  pomcoh::Interpretation interp;
  for (const auto& [name, space] : spaces.spaces) interp.emplace(name, space);
  const pomcoh::TokenSet results = experiment_results(ps, interp);
  const bool clique = is_clique(conclusion_space(ps, interp), results);

  for (const pomcoh::Token& t : results) {
    if (opt.machine())
      std::cout << "result\t\t" << t.str() << "\n";
    else
      std::cout << t.str() << "\n";
  }
  if (opt.machine())
    std::cout << "clique\t" << (clique ? "true" : "false") << "\t\n";
  else
    std::cout << "clique: " << (clique ? "true" : "false") << "\n";
  return kExitPass;
}

int cmd_props(const std::string& suite, const Options& opt) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = pomcoh::suite_names();
  else
    suites.push_back(suite);

  bool all_pass = true;
  for (const std::string& name : suites) {
    const auto results = pomcoh::run_suite(name, opt.suite_config());
    for (const pomcoh::PropertyResult& r : results) {
      all_pass = all_pass && r.pass;
      if (opt.machine()) {
        std::cout << name << ": " << r.name << "\t" << (r.pass ? "PASS" : "FAIL")
                  << "\t" << r.witness << "\n";
      } else {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << ": " << r.name;
        if (!r.witness.empty()) std::cout << " -- " << r.witness;
        std::cout << "\n";
      }
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_dicograph(const std::string& formula_text) {
  const pomcoh::Formula f = pomcoh::parse_formula(formula_text);
  std::cout << pomcoh::dicograph_dot(f);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-space semantics for pomset logic with the flag modality"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--max-depth", opt.tree_depth, "tree depth for exhaustive suites")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-web", opt.web_cap, "web size cap for isomorphism search")
      ->check(CLI::PositiveNumber);
  app.add_option("--circuit-cap", opt.circuit_cap, "vertex cap for circuit search")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized properties");
  app.add_option("--catalog", opt.catalog,
                 "interpretation spaces for semantic checks (one, coh2, incoh2, mix3)")
      ->delimiter(',');

  std::string file, atoms_file, suite = "all", formula_text;
  bool dot = false;

  CLI::App* check = app.add_subcommand("check", "run the correctness criterion");
  check->add_option("file", file, "proof structure file")->required();
  check->add_flag("--dot", dot, "print the structure as DOT first");

  CLI::App* interpret =
      app.add_subcommand("interpret", "compute all experiment results");
  interpret->add_option("file", file, "proof structure file")->required();
  interpret->add_option("--atoms", atoms_file, "space file interpreting the variables")
      ->required();

  CLI::App* props = app.add_subcommand("props", "run property suites");
  props->add_option("--suite", suite, "before|flag|functor|nomonad|hyper|nets|all");

  CLI::App* dico = app.add_subcommand("dicograph", "print a formula's dicograph as DOT");
  dico->add_option("formula", formula_text, "formula text")->required();

  try {
    app.parse(argc, argv);
    if (check->parsed()) return cmd_check(file, opt, dot);
    if (interpret->parsed()) return cmd_interpret(file, atoms_file, opt);
    if (props->parsed()) return cmd_props(suite, opt);
    if (dico->parsed()) return cmd_dicograph(formula_text);
    return kExitError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
