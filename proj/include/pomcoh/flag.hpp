#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pomcoh/space.hpp"
#include "pomcoh/trace.hpp"
#include "pomcoh/tree.hpp"

namespace pomcoh {

// Coherence of two generic trees over the web of the base space: equal as
// functions, or classified by the base relation of their values at the
// minimal disagreement point. Throws std::domain_error when a leaf token
// falls outside the base web.
Rel3 flag_rel3(const Space& base, const Tree& f, const Tree& g);

// The modal space flag A. Its web (all normal generic trees over |A|) is
// never enumerated; the space is exposed through membership and the
// pairwise coherence test only.
struct FlagSpace {
  Space base;
  bool contains(const Tree& t) const;
  Rel3 rel(const Tree& f, const Tree& g) const { return flag_rel3(base, f, g); }
};

bool is_flag_clique(const Space& base, std::span<const Tree> trees);

// Root split and its inverse: the contraction isomorphism between
// flag A and flag A < flag A, tree by tree.
std::pair<Tree, Tree> split(const Tree& h);
Tree merge(const Tree& h0, const Tree& h1);

// Classification of split pairs in flag A < flag A.
Rel3 flag_before_rel3(const Space& base, const std::pair<Tree, Tree>& h,
                      const std::pair<Tree, Tree>& g);

// For every sampled distinct pair, the classifications over A and over the
// negation of A are opposite strict ones.
bool flag_self_duality_check(const Space& base,
                             std::span<const std::pair<Tree, Tree>> samples);

// For every sampled pair (h,g), coherence in flag A matches the
// before-space classification of their splits.
bool contraction_iso_check(const Space& base,
                           std::span<const std::pair<Tree, Tree>> samples);

// A embeds into flag A by constant trees; the projection back is defined
// exactly on the constant trees.
Tree retract_embed(const Token& a);
std::optional<Token> retract_project(const Tree& t);

// Membership in the lifted trace flag(l): every superposition leaf of
// (f,g) must be a pair of l. Throws std::domain_error on alphabet mismatch.
bool flag_lift_contains(const LinearTrace& l, const Tree& f, const Tree& g);

// Given (f,h) in flag(l2 o l1), produces a middle tree g with
// (f,g) in flag(l1) and (g,h) in flag(l2).
Tree flag_compose_witness(const LinearTrace& l1, const LinearTrace& l2,
                          const Tree& f, const Tree& h);

// Exhaustive refutation of a counit for flag, on the fragment the
// two-token witness space generates: every candidate component fails one
// of the three naturality squares, except the doubly empty candidate,
// which no comonad counit can be.
struct NoCounitCandidate {
  std::vector<std::pair<int, int>> mapping;  // (fragment index, 0=a / 1=b)
  bool r1_identity = false;
  std::string description;
  std::string killed_by;  // "square a" | "square b" | "square ab" | "counit law"
};

struct NoCounitReport {
  std::vector<Tree> fragment;  // constant a, constant b, <a b>
  std::vector<NoCounitCandidate> candidates;
  int survivors = 0;
};

NoCounitReport verify_no_counit();

}  // namespace pomcoh
