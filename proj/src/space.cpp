#include "pomcoh/space.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pomcoh {

const char* to_string(Rel3 r) {
  switch (r) {
    case Rel3::ScohStrict: return "scoh";
    case Rel3::Equal: return "equal";
    case Rel3::SincohStrict: return "sincoh";
  }
  return "?";
}

namespace {

std::pair<Token, Token> ordered(const Token& a, const Token& b) {
  return a < b ? std::pair(a, b) : std::pair(b, a);
}

}  // namespace

Space::Space(std::vector<Token> web,
             const std::vector<std::pair<Token, Token>>& strictly_coherent_pairs)
    : web_(std::move(web)) {
  std::sort(web_.begin(), web_.end());
  web_.erase(std::unique(web_.begin(), web_.end()), web_.end());
  for (const auto& [a, b] : strictly_coherent_pairs) {
    if (!contains(a) || !contains(b))
      throw std::invalid_argument("coherent pair mentions a token outside the web");
    if (a == b)
      throw std::invalid_argument("a token cannot be strictly coherent with itself");
    scoh_.insert(ordered(a, b));
  }
}

bool Space::contains(const Token& t) const {
  return std::binary_search(web_.begin(), web_.end(), t);
}

Rel3 Space::rel(const Token& a, const Token& b) const {
  if (!contains(a) || !contains(b))
    throw std::domain_error("token outside the web");
  if (a == b) return Rel3::Equal;
  return scoh_.count(ordered(a, b)) ? Rel3::ScohStrict : Rel3::SincohStrict;
}

Rel3 rel3_tensor(Rel3 a, Rel3 b) {
  if (a == Rel3::Equal && b == Rel3::Equal) return Rel3::Equal;
  const bool coh = a != Rel3::SincohStrict && b != Rel3::SincohStrict;
  return coh ? Rel3::ScohStrict : Rel3::SincohStrict;
}

Rel3 rel3_par(Rel3 a, Rel3 b) {
  if (a == Rel3::Equal && b == Rel3::Equal) return Rel3::Equal;
  const bool coh = a == Rel3::ScohStrict || b == Rel3::ScohStrict;
  return coh ? Rel3::ScohStrict : Rel3::SincohStrict;
}

Rel3 rel3_before(Rel3 a, Rel3 b) {
  if (a == Rel3::Equal && b == Rel3::Equal) return Rel3::Equal;
  const bool coh =
      a == Rel3::ScohStrict || (a == Rel3::Equal && b != Rel3::SincohStrict);
  return coh ? Rel3::ScohStrict : Rel3::SincohStrict;
}

Rel3 rel3_after(Rel3 a, Rel3 b) { return rel3_before(b, a); }

Rel3 rel3_lollipop(Rel3 input, Rel3 output) {
  if (input == Rel3::Equal && output == Rel3::Equal) return Rel3::Equal;
  const bool coh = input == Rel3::SincohStrict || output == Rel3::ScohStrict;
  return coh ? Rel3::ScohStrict : Rel3::SincohStrict;
}

Space negation(const Space& a) {
  std::vector<std::pair<Token, Token>> scoh;
  const auto& web = a.web();
  for (std::size_t i = 0; i < web.size(); ++i)
    for (std::size_t j = i + 1; j < web.size(); ++j)
      if (a.rel(web[i], web[j]) == Rel3::SincohStrict)
        scoh.emplace_back(web[i], web[j]);
  return Space(web, scoh);
}

namespace {

Space product_space(const Space& a, const Space& b, Rel3 (*cell)(Rel3, Rel3)) {
  std::vector<Token> web;
  web.reserve(a.size() * b.size());
  for (const Token& ta : a.web())
    for (const Token& tb : b.web()) web.push_back(Token::pair(ta, tb));

  std::vector<std::pair<Token, Token>> scoh;
  for (const Token& ta : a.web())
    for (const Token& tb : b.web())
      for (const Token& ta2 : a.web())
        for (const Token& tb2 : b.web()) {
          if (!(std::pair(ta, tb) < std::pair(ta2, tb2))) continue;
          if (cell(a.rel(ta, ta2), b.rel(tb, tb2)) == Rel3::ScohStrict)
            scoh.emplace_back(Token::pair(ta, tb), Token::pair(ta2, tb2));
        }
  return Space(std::move(web), scoh);
}

}  // namespace

Space tensor(const Space& a, const Space& b) { return product_space(a, b, rel3_tensor); }
Space par(const Space& a, const Space& b) { return product_space(a, b, rel3_par); }
Space before(const Space& a, const Space& b) { return product_space(a, b, rel3_before); }
Space lollipop(const Space& a, const Space& b) {
  return product_space(a, b, rel3_lollipop);
}

Space after(const Space& a, const Space& b) {
  // before(B,A) with every token (beta,alpha) relabelled to (alpha,beta).
  const Space base = before(b, a);
  std::vector<Token> web;
  web.reserve(base.size());
  for (const Token& t : base.web()) web.push_back(Token::pair(t.second(), t.first()));
  std::vector<std::pair<Token, Token>> scoh;
  for (const auto& [x, y] : base.strict_pairs())
    scoh.emplace_back(Token::pair(x.second(), x.first()),
                      Token::pair(y.second(), y.first()));
  return Space(std::move(web), scoh);
}

bool is_clique(const Space& space, const TokenSet& tokens) {
  for (const Token& t : tokens)
    if (!space.contains(t)) return false;
  for (auto i = tokens.begin(); i != tokens.end(); ++i)
    for (auto j = std::next(i); j != tokens.end(); ++j)
      if (space.rel(*i, *j) == Rel3::SincohStrict) return false;
  return true;
}

Clique Clique::checked(Space space, TokenSet tokens) {
  if (!is_clique(space, tokens))
    throw std::invalid_argument("token set is not a clique of the space");
  return Clique{std::move(space), std::move(tokens)};
}

SpOrder SpOrder::leaf(int position) {
  if (position < 0) throw std::invalid_argument("sp-order positions are 0-based");
  auto rep = std::make_shared<Rep>();
  rep->position = position;
  return SpOrder(std::move(rep));
}

SpOrder SpOrder::series(const SpOrder& lhs, const SpOrder& rhs) {
  auto rep = std::make_shared<Rep>();
  rep->series = true;
  rep->kids = {lhs.rep_, rhs.rep_};
  return SpOrder(std::move(rep));
}

SpOrder SpOrder::parallel(const SpOrder& lhs, const SpOrder& rhs) {
  auto rep = std::make_shared<Rep>();
  rep->series = false;
  rep->kids = {lhs.rep_, rhs.rep_};
  return SpOrder(std::move(rep));
}

int SpOrder::position() const {
  if (!is_leaf()) throw std::logic_error("position() on a compound sp-order");
  return rep_->position;
}

bool SpOrder::is_series() const {
  if (is_leaf()) throw std::logic_error("is_series() on a leaf sp-order");
  return rep_->series;
}

SpOrder SpOrder::left() const { return SpOrder(rep_->kids.first); }
SpOrder SpOrder::right() const { return SpOrder(rep_->kids.second); }

std::vector<int> SpOrder::positions() const {
  std::vector<int> out;
  std::function<void(const SpOrder&)> walk = [&](const SpOrder& o) {
    if (o.is_leaf()) {
      out.push_back(o.position());
      return;
    }
    walk(o.left());
    walk(o.right());
  };
  walk(*this);
  return out;
}

namespace {

// less[j][i] holds when j precedes i in the sp order (their meet is a series
// node with j on the left).
void order_matrix(const SpOrder& o, std::vector<std::vector<bool>>& less) {
  if (o.is_leaf()) return;
  order_matrix(o.left(), less);
  order_matrix(o.right(), less);
  if (o.is_series())
    for (int j : o.left().positions())
      for (int i : o.right().positions()) less[j][i] = true;
}

Token sp_token(const SpOrder& o, const std::vector<Token>& leaf_tokens) {
  if (o.is_leaf()) return leaf_tokens[static_cast<std::size_t>(o.position())];
  return Token::pair(sp_token(o.left(), leaf_tokens), sp_token(o.right(), leaf_tokens));
}

}  // namespace

Space sp_space(const SpOrder& order, std::span<const Space> components) {
  std::vector<int> pos = order.positions();
  const std::size_t n = pos.size();
  if (n != components.size())
    throw std::invalid_argument("sp-order arity does not match component count");
  {
    std::vector<int> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != static_cast<int>(i))
        throw std::invalid_argument("sp-order must use each position exactly once");
  }
  if (order.is_leaf()) return components[0];

  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  order_matrix(order, less);

  // Enumerate component tuples; tuple[i] indexes the web of component i.
  std::vector<std::vector<Token>> tuples;
  bool any_empty = false;
  for (const Space& c : components) any_empty = any_empty || c.web().empty();
  if (!any_empty) {
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      std::vector<Token> leaf_tokens;
      leaf_tokens.reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        leaf_tokens.push_back(components[i].web()[idx[i]]);
      tuples.push_back(std::move(leaf_tokens));
      std::size_t k = n;
      while (k > 0 && ++idx[k - 1] == components[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }

  std::vector<Token> web;
  web.reserve(tuples.size());
  for (const auto& t : tuples) web.push_back(sp_token(order, t));

  std::vector<std::pair<Token, Token>> scoh;
  for (std::size_t x = 0; x < tuples.size(); ++x)
    for (std::size_t y = x + 1; y < tuples.size(); ++y) {
      bool strict = false;
      for (std::size_t i = 0; i < n && !strict; ++i) {
        if (components[i].rel(tuples[x][i], tuples[y][i]) != Rel3::ScohStrict)
          continue;
        bool earlier_equal = true;
        for (std::size_t j = 0; j < n; ++j)
          if (less[j][i] && !(tuples[x][j] == tuples[y][j])) {
            earlier_equal = false;
            break;
          }
        strict = earlier_equal;
      }
      if (strict) scoh.emplace_back(web[x], web[y]);
    }
  return Space(std::move(web), scoh);
}

std::optional<std::vector<std::pair<Token, Token>>> spaces_isomorphic(
    const Space& a, const Space& b, std::size_t web_cap) {
  if (a.size() > web_cap || b.size() > web_cap)
    throw std::length_error("isomorphism search web cap exceeded");
  if (a.size() != b.size()) return std::nullopt;
  const auto& wa = a.web();
  const auto& wb = b.web();
  const std::size_t n = wa.size();

  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.rel(wa[j], wa[i]) == b.rel(wb[image[j]], wb[cand]);
      if (!ok) continue;
      used[cand] = true;
      image[i] = cand;
      if (assign(i + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  std::vector<std::pair<Token, Token>> bijection;
  bijection.reserve(n);
  for (std::size_t i = 0; i < n; ++i) bijection.emplace_back(wa[i], wb[image[i]]);
  return bijection;
}

}  // namespace pomcoh
