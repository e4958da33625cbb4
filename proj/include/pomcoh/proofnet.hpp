#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pomcoh/formula.hpp"
#include "pomcoh/space.hpp"

namespace pomcoh {

// A handsome proof structure: the conclusion dicograph plus a perfect
// matching of dual atom occurrences, with an optional list of cut
// subformulas (tensor nodes of the shape K * ~K, addressed by 'l'/'r'
// paths from the root).
struct ProofStructure {
  Formula conclusion;
  std::vector<std::pair<int, int>> axioms;
  std::vector<std::string> cuts;
};

// Throws std::invalid_argument when the matching is not a perfect pairing
// of dual occurrences or a cut path does not address a cut-shaped tensor.
void validate_structure(const ProofStructure& ps);

// File format: first significant line is the conclusion formula, then one
// "link <occ> <occ>" line per axiom, then optional "cut <path>" lines.
// '#' starts a comment.
ProofStructure parse_structure_text(std::string_view text);

std::string structure_dot(const ProofStructure& ps);

struct Verdict {
  bool correct = false;
  std::vector<int> circuit;  // a chordless ae-circuit when incorrect
  std::string circuit_display(const ProofStructure& ps) const;
};

// The correctness criterion: every elementary circuit alternating R and B
// steps must have an R chord. Enumeration is exponential; structures with
// more atoms than vertex_cap are rejected with std::length_error.
Verdict check_correctness(const ProofStructure& ps, std::size_t vertex_cap = 20);

using Interpretation = std::map<std::string, Space>;

// The compound space of a formula under an interpretation of its variables.
Space formula_space(const Formula& f, const Interpretation& interp);

// The space of the conclusion with cut subformulas removed.
Space conclusion_space(const ProofStructure& ps, const Interpretation& interp);

// All results of succeeding experiments: one token choice per axiom,
// propagated to a token of the cut-free conclusion; experiments whose cut
// sides disagree are dropped.
TokenSet experiment_results(const ProofStructure& ps, const Interpretation& interp);

// one / coh2 / incoh2 / mix3 — the spaces the semantic check ranges over.
std::vector<std::pair<std::string, Space>> default_catalog();

// Every perfect matching of dual occurrences of the formula (empty when
// positive and negative occurrence counts differ for some variable).
std::vector<std::vector<std::pair<int, int>>> all_axiom_matchings(const Formula& f);

struct SemanticEntry {
  std::vector<std::pair<std::string, std::string>> assignment;  // var -> space name
  bool clique = false;
};

struct SemanticReport {
  bool structurally_correct = false;
  std::vector<SemanticEntry> entries;
  bool all_clique = true;
  bool some_non_clique = false;
  // A correct structure must be a clique under every interpretation; an
  // incorrect one must be separated by some interpretation in the catalog.
  bool consistent() const {
    return structurally_correct ? all_clique : some_non_clique;
  }
};

SemanticReport semantic_correctness_check(
    const ProofStructure& ps,
    std::span<const std::pair<std::string, Space>> catalog);

}  // namespace pomcoh
