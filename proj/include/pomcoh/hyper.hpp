#pragma once

#include <set>
#include <span>
#include <vector>

#include "pomcoh/token.hpp"
#include "pomcoh/tree.hpp"

namespace pomcoh {

// A hypercoherence: a finite web plus its atomic coherence, a set of finite
// nonempty subsets of the web containing all singletons. Only the strict
// part (the non-singleton members) is stored.
class Hyper {
 public:
  Hyper() = default;
  Hyper(std::vector<Token> web, const std::vector<std::vector<Token>>& gamma_star);

  const std::vector<Token>& web() const { return web_; }
  bool contains(const Token& t) const;

  bool in_gamma(const std::vector<Token>& w) const;
  bool in_gamma_star(const std::vector<Token>& w) const;
  const std::set<std::vector<Token>>& gamma_star() const { return gamma_star_; }

  static std::vector<Token> canon(std::vector<Token> w);

  friend bool operator==(const Hyper&, const Hyper&) = default;

 private:
  std::vector<Token> web_;                     // sorted, unique
  std::set<std::vector<Token>> gamma_star_;    // canonical sorted sets, size >= 2
};

// Webs beyond 16 tokens are rejected (std::length_error): the
// constructions below enumerate subsets of the web.
Hyper hc_negation(const Hyper& x);
Hyper hc_tensor(const Hyper& x, const Hyper& y);
Hyper hc_par(const Hyper& x, const Hyper& y);
Hyper hc_before(const Hyper& x, const Hyper& y);
Hyper hc_lollipop(const Hyper& x, const Hyper& y);

// Strict atomic coherence of a finite set of trees in flag X: scanning the
// common refinement in address order, the first leaf where the values
// split must evaluate to a set in the strict coherence of X.
bool hflag_gamma_star(const Hyper& x, std::span<const Tree> trees);

}  // namespace pomcoh
