#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pomcoh {

enum class Conn { Par, Before, Tensor };

char conn_symbol(Conn c);  // '|', ';', '*'

// A formula in negation normal form: atoms carry their polarity, inner
// nodes one of the three multiplicative connectives.
class Formula {
 public:
  static Formula atom(std::string_view var, bool positive);
  static Formula binary(Conn c, const Formula& left, const Formula& right);

  bool is_atom() const { return rep_->left == nullptr; }
  const std::string& var() const;
  bool positive() const;
  Conn conn() const;
  Formula left() const;
  Formula right() const;

  int atom_count() const { return rep_->atoms; }
  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return compare(a, b) == 0;
  }

 private:
  struct Rep {
    std::string var;
    bool positive = true;
    Conn conn = Conn::Par;
    std::shared_ptr<const Rep> left, right;
    int atoms = 1;
  };
  explicit Formula(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static int compare(const Formula& a, const Formula& b);
  std::shared_ptr<const Rep> rep_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// ASCII syntax: '*' tensor, '|' par, ';' before, '~x' or "x'" a negated
// atom. Chains of one connective associate to the left; mixing connectives
// requires parentheses.
Formula parse_formula(std::string_view text);

// De Morgan dual; keeps the left/right order of every connective.
Formula dual(const Formula& f);

// Leaves in left-to-right order; the index is the occurrence id used by
// dicographs, axiom links and experiments.
struct AtomOcc {
  int index;
  std::string var;
  bool positive;
  std::string path;  // 'l'/'r' steps from the root

  std::string display() const { return (positive ? "" : "~") + var; }
};

std::vector<AtomOcc> atom_occurrences(const Formula& f);

// Subformula at a 'l'/'r' path, or absent when the path leaves the tree.
std::optional<Formula> subformula_at(const Formula& f, std::string_view path);

// The directed-cograph reading of a formula: occurrences meeting on a
// tensor yield an edge, on a before an arc, on a par nothing.
struct Dicograph {
  int vertex_count = 0;
  std::set<std::pair<int, int>> arcs;   // directed
  std::set<std::pair<int, int>> edges;  // undirected, stored with first < second

  friend bool operator==(const Dicograph&, const Dicograph&) = default;
};

Dicograph dicograph_of(const Formula& f);

// Deterministic DOT rendering of the dicograph; vertices are ordered by
// label so formulas with the same dicograph and distinct atom names render
// identically.
std::string dicograph_dot(const Formula& f);

}  // namespace pomcoh
