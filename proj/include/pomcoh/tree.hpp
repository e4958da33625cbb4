#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pomcoh/token.hpp"

namespace pomcoh {

// A finite word over {0,1}, standing for the infinite word m.0^omega.
using BitWord = std::string;

// Order of the infinite words m.0^omega: compare bitwise, padding the
// shorter word with zeros.
bool word_less(const BitWord& a, const BitWord& b);
bool word_equal(const BitWord& a, const BitWord& b);

// A finite binary tree with tokens at the leaves: the tree form of a
// continuous function from the Cantor space to a discrete token set.
// Construction does not normalize; see normalize / is_normal.
class Tree {
 public:
  static Tree leaf(const Token& t);
  static Tree node(const Tree& left, const Tree& right);

  bool is_leaf() const { return rep_->left == nullptr; }
  const Token& token() const;  // leaves only
  Tree left() const;
  Tree right() const;

  int depth() const { return rep_->depth; }        // a leaf has depth 0
  int leaf_count() const { return rep_->leaves; }

  std::string str() const;  // "a" or "<l r>"

  friend bool operator==(const Tree& a, const Tree& b) {
    return compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return compare(a, b) <=> 0;
  }

 private:
  struct Rep {
    std::optional<Token> token;  // leaves
    std::shared_ptr<const Rep> left, right;
    int depth = 0;
    int leaves = 1;
  };
  explicit Tree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static int compare(const Tree& a, const Tree& b);

  friend struct TreeWalk;
  std::shared_ptr<const Rep> rep_;
};

// Collapses every node whose children are leaves with equal tokens; the
// unique normal form of the rewriting t[<x x>] -> t[x].
Tree normalize(const Tree& t);
bool is_normal(const Tree& t);

// Addresses of nodes whose two children are equal-token leaves.
std::vector<BitWord> redex_paths(const Tree& t);
// Applies the reduction at one such address.
Tree contract_redex(const Tree& t, const BitWord& path);

// Value of the encoded function at m.0^omega.
Token eval(const Tree& t, const BitWord& m);

struct PrefixPair {
  BitWord word;
  Token value;
};

// Leaf addresses with their tokens, in lexicographic address order.
std::vector<PrefixPair> to_pairs(const Tree& t);

// Rebuilds a tree from a prefix cover. Words that overlap or leave a branch
// uncovered are rejected (std::invalid_argument); equal-token siblings are
// merged rather than rejected.
Tree from_pairs(const std::vector<PrefixPair>& cover);

struct RefLeaf {
  BitWord word;
  Token left, right;
};

// Superposition of two trees: the leaf partition refining both, in
// lexicographic address order.
std::vector<RefLeaf> common_refinement(const Tree& f, const Tree& g);

struct MultiRefLeaf {
  BitWord word;
  std::vector<Token> values;
};

std::vector<MultiRefLeaf> common_refinement(std::span<const Tree> trees);

// The least address where the two functions disagree (as infinite words),
// or absent when they are equal as functions.
std::optional<BitWord> first_difference(const Tree& f, const Tree& g);
std::optional<std::tuple<BitWord, Token, Token>> first_difference_values(
    const Tree& f, const Tree& g);

// Grammar: tree := name | '<' tree tree '>'
Tree parse_tree(std::string_view text);

// Prefix covers as text, one "bitword token" pair per line; the root
// address is written as "." so every line has two fields.
std::string format_prefix_cover(const std::vector<PrefixPair>& cover);
std::vector<PrefixPair> parse_prefix_cover(std::string_view text);

// All normal trees over the alphabet with structural depth <= max_depth.
std::vector<Tree> all_normal_trees(std::span<const Token> alphabet, int max_depth);

// A raw (possibly reducible) random tree; node probability decays with depth.
Tree random_tree(std::span<const Token> alphabet, int max_depth, std::mt19937& rng);

}  // namespace pomcoh
