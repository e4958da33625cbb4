#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>

namespace pomcoh {

// A web element: either an atom, or a pair of tokens of component webs.
// Tokens of compound spaces keep their pair structure, so decomposing a
// token of A*B into its A and B parts is purely syntactic.
class Token {
 public:
  static Token atom(std::string_view name);
  static Token pair(const Token& first, const Token& second);

  bool is_atom() const noexcept { return rep_->fst == nullptr; }
  bool is_pair() const noexcept { return rep_->fst != nullptr; }

  const std::string& name() const;  // atoms only
  Token first() const;              // pairs only
  Token second() const;

  std::string str() const;  // "a" or "(a,b)"

  friend bool operator==(const Token& a, const Token& b) {
    return compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Token& a, const Token& b) {
    return compare(a, b) <=> 0;
  }

 private:
  struct Rep {
    std::string name;  // empty for pairs
    std::shared_ptr<const Rep> fst, snd;
  };

  explicit Token(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static int compare(const Token& a, const Token& b);

  std::shared_ptr<const Rep> rep_;
};

}  // namespace pomcoh
