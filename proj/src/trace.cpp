#include "pomcoh/trace.hpp"

#include <stdexcept>

namespace pomcoh {

LinearTrace make_trace(Space source, Space target,
                       std::set<std::pair<Token, Token>> pairs) {
  for (const auto& [a, b] : pairs)
    if (!source.contains(a) || !target.contains(b))
      throw std::domain_error("trace pair outside source/target webs");
  return LinearTrace{std::move(source), std::move(target), std::move(pairs)};
}

bool is_linear_trace(const LinearTrace& t) {
  for (const auto& [a, b] : t.pairs)
    if (!t.source.contains(a) || !t.target.contains(b)) return false;
  for (auto i = t.pairs.begin(); i != t.pairs.end(); ++i)
    for (auto j = std::next(i); j != t.pairs.end(); ++j) {
      const Rel3 r = rel3_lollipop(t.source.rel(i->first, j->first),
                                   t.target.rel(i->second, j->second));
      if (r == Rel3::SincohStrict) return false;
    }
  return true;
}

TokenSet trace_apply(const LinearTrace& t, const TokenSet& x) {
  TokenSet out;
  for (const auto& [a, b] : t.pairs)
    if (x.count(a)) out.insert(b);
  return out;
}

LinearTrace trace_compose(const LinearTrace& first, const LinearTrace& second) {
  if (!(first.target == second.source))
    throw std::invalid_argument("trace composition: middle spaces differ");
  std::set<std::pair<Token, Token>> pairs;
  for (const auto& [a, b] : first.pairs)
    for (const auto& [b2, c] : second.pairs)
      if (b == b2) pairs.emplace(a, c);
  return LinearTrace{first.source, second.target, std::move(pairs)};
}

LinearTrace identity_trace(const Space& a) {
  std::set<std::pair<Token, Token>> pairs;
  for (const Token& t : a.web()) pairs.emplace(t, t);
  return LinearTrace{a, a, std::move(pairs)};
}

LinearTrace transpose(const LinearTrace& t) {
  std::set<std::pair<Token, Token>> pairs;
  for (const auto& [a, b] : t.pairs) pairs.emplace(b, a);
  return LinearTrace{t.target, t.source, std::move(pairs)};
}

LinearTrace before_assoc_iso(const Space& a, const Space& b, const Space& c) {
  // { ((alpha,(beta,gamma)), ((alpha,beta),gamma)) }
  std::set<std::pair<Token, Token>> pairs;
  for (const Token& ta : a.web())
    for (const Token& tb : b.web())
      for (const Token& tc : c.web())
        pairs.emplace(Token::pair(ta, Token::pair(tb, tc)),
                      Token::pair(Token::pair(ta, tb), tc));
  return LinearTrace{before(a, before(b, c)), before(before(a, b), c),
                     std::move(pairs)};
}

namespace {

std::set<std::pair<Token, Token>> diagonal(const Space& a, const Space& b) {
  std::set<std::pair<Token, Token>> pairs;
  for (const Token& ta : a.web())
    for (const Token& tb : b.web()) {
      const Token t = Token::pair(ta, tb);
      pairs.emplace(t, t);
    }
  return pairs;
}

}  // namespace

LinearTrace tensor_to_before(const Space& a, const Space& b) {
  return LinearTrace{tensor(a, b), before(a, b), diagonal(a, b)};
}

LinearTrace before_to_par(const Space& a, const Space& b) {
  return LinearTrace{before(a, b), par(a, b), diagonal(a, b)};
}

}  // namespace pomcoh
