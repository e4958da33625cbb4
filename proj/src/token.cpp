#include "pomcoh/token.hpp"

#include <stdexcept>

namespace pomcoh {

Token Token::atom(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("token atom name must be nonempty");
  auto rep = std::make_shared<Rep>();
  rep->name.assign(name);
  return Token(std::move(rep));
}

Token Token::pair(const Token& first, const Token& second) {
  auto rep = std::make_shared<Rep>();
  rep->fst = first.rep_;
  rep->snd = second.rep_;
  return Token(std::move(rep));
}

const std::string& Token::name() const {
  if (!is_atom()) throw std::logic_error("name() on a pair token");
  return rep_->name;
}

Token Token::first() const {
  if (!is_pair()) throw std::logic_error("first() on an atom token");
  return Token(rep_->fst);
}

Token Token::second() const {
  if (!is_pair()) throw std::logic_error("second() on an atom token");
  return Token(rep_->snd);
}

std::string Token::str() const {
  if (is_atom()) return rep_->name;
  return "(" + first().str() + "," + second().str() + ")";
}

int Token::compare(const Token& a, const Token& b) {
  struct Walk {
    static int go(const Rep* x, const Rep* y) {
      if (x == y) return 0;
      const bool xa = x->fst == nullptr;
      const bool ya = y->fst == nullptr;
      if (xa != ya) return xa ? -1 : 1;  // atoms sort before pairs
      if (xa) {
        const int c = x->name.compare(y->name);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
      }
      if (const int c = go(x->fst.get(), y->fst.get())) return c;
      return go(x->snd.get(), y->snd.get());
    }
  };
  return Walk::go(a.rep_.get(), b.rep_.get());
}

}  // namespace pomcoh
