#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pomcoh/formula.hpp"
#include "pomcoh/space.hpp"

namespace pomcoh {

struct SuiteConfig {
  int tree_depth = 2;          // structural depth of exhaustive tree enumerations
  std::size_t web_cap = 8;     // isomorphism search bound
  std::size_t circuit_cap = 20;
  unsigned seed = 20260811;    // randomized checks are reproducible
  int random_rounds = 200;
  // Catalog spaces the semantic checks range over; empty selects all of
  // one/coh2/incoh2/mix3. Unknown names are rejected.
  std::vector<std::string> catalog;

  void validate() const;  // bounds must be positive
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string witness;  // counterexample when failing, optional detail otherwise
};

// before | flag | functor | nomonad | hyper | nets
std::vector<std::string> suite_names();

// Runs one named suite; throws std::invalid_argument for unknown names.
std::vector<PropertyResult> run_suite(std::string_view suite, const SuiteConfig& cfg);

// Helpers shared with tests and the CLI.

// Every coherence space on the given web (all strict-coherence choices).
std::vector<Space> all_spaces_on(const std::vector<Token>& web);

// Web families used by the exhaustive checks: x/y and x/y/z atoms.
std::vector<Token> small_web(int size);

// A random associativity/commutativity rewrite of a formula, tracking how
// atom occurrences move: perm[old index] = new index.
struct RewrittenFormula {
  Formula formula;
  std::vector<int> perm;
};
RewrittenFormula random_ac_rewrite(const Formula& f, int steps, unsigned seed);

Dicograph relabel(const Dicograph& d, const std::vector<int>& perm);

// All formulas reachable by one connective weakening (tensor to before, or
// before to par, at one node).
std::vector<Formula> single_weakenings(const Formula& f);

}  // namespace pomcoh
