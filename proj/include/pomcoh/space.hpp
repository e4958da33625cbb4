#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pomcoh/token.hpp"

namespace pomcoh {

// Three-way classification of a pair of tokens of one space: any two tokens
// are equal, strictly coherent, or strictly incoherent, and exactly one of
// these holds.
enum class Rel3 { ScohStrict, Equal, SincohStrict };

const char* to_string(Rel3 r);

// A finite coherence space: an enumerated web plus the set of strictly
// coherent unordered pairs of distinct tokens. Equality and strict
// incoherence are derived, so there is a single canonical representation
// and spaces compare with ==.
class Space {
 public:
  Space() = default;  // empty web
  Space(std::vector<Token> web,
        const std::vector<std::pair<Token, Token>>& strictly_coherent_pairs);

  const std::vector<Token>& web() const { return web_; }
  std::size_t size() const { return web_.size(); }
  bool contains(const Token& t) const;

  // Throws std::domain_error when a token is outside the web.
  Rel3 rel(const Token& a, const Token& b) const;
  bool coherent(const Token& a, const Token& b) const {
    return rel(a, b) != Rel3::SincohStrict;
  }

  const std::set<std::pair<Token, Token>>& strict_pairs() const { return scoh_; }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::vector<Token> web_;                  // sorted, unique
  std::set<std::pair<Token, Token>> scoh_;  // each pair ordered (lhs < rhs)
};

using TokenSet = std::set<Token>;

// Cell rules of the multiplicative tables, on component classifications.
Rel3 rel3_tensor(Rel3 a, Rel3 b);
Rel3 rel3_par(Rel3 a, Rel3 b);
Rel3 rel3_before(Rel3 a, Rel3 b);
Rel3 rel3_lollipop(Rel3 input, Rel3 output);

Space negation(const Space& a);
Space tensor(const Space& a, const Space& b);
Space par(const Space& a, const Space& b);
Space before(const Space& a, const Space& b);
Space after(const Space& a, const Space& b);  // after(A,B) = before(B,A), components swapped
Space lollipop(const Space& a, const Space& b);

bool is_clique(const Space& space, const TokenSet& tokens);

// A clique bundled with its space; the factory validates pairwise coherence.
struct Clique {
  Space space;
  TokenSet tokens;
  static Clique checked(Space space, TokenSet tokens);
};

// A series-parallel order term over leaf positions 0..n-1; series maps to
// the before connective, parallel to par.
class SpOrder {
 public:
  static SpOrder leaf(int position);
  static SpOrder series(const SpOrder& lhs, const SpOrder& rhs);
  static SpOrder parallel(const SpOrder& lhs, const SpOrder& rhs);

  bool is_leaf() const { return rep_->kids.first == nullptr; }
  int position() const;
  bool is_series() const;
  SpOrder left() const;
  SpOrder right() const;

  // Leaf positions in left-to-right order.
  std::vector<int> positions() const;

 private:
  struct Rep {
    int position = -1;
    bool series = false;
    std::pair<std::shared_ptr<const Rep>, std::shared_ptr<const Rep>> kids;
  };
  explicit SpOrder(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// The coherence space of an sp-ordered family, built from the direct
// clause on component tuples; positions must be exactly 0..n-1, one each.
Space sp_space(const SpOrder& order, std::span<const Space> components);

// Exhaustive search for a web bijection preserving rel in both directions.
// Throws std::length_error when either web exceeds web_cap.
std::optional<std::vector<std::pair<Token, Token>>> spaces_isomorphic(
    const Space& a, const Space& b, std::size_t web_cap = 8);

}  // namespace pomcoh
