#include "pomcoh/hyper.hpp"

#include <algorithm>
#include <stdexcept>

namespace pomcoh {

std::vector<Token> Hyper::canon(std::vector<Token> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

Hyper::Hyper(std::vector<Token> web, const std::vector<std::vector<Token>>& gamma_star)
    : web_(std::move(web)) {
  std::sort(web_.begin(), web_.end());
  web_.erase(std::unique(web_.begin(), web_.end()), web_.end());
  for (const auto& raw : gamma_star) {
    std::vector<Token> w = canon(raw);
    if (w.size() < 2)
      throw std::invalid_argument("strict atomic coherence holds non-singleton sets only");
    for (const Token& t : w)
      if (!contains(t))
        throw std::invalid_argument("atomic coherence mentions a token outside the web");
    gamma_star_.insert(std::move(w));
  }
}

bool Hyper::contains(const Token& t) const {
  return std::binary_search(web_.begin(), web_.end(), t);
}

bool Hyper::in_gamma(const std::vector<Token>& w) const {
  const std::vector<Token> c = canon(w);
  if (c.empty()) return false;
  for (const Token& t : c)
    if (!contains(t)) return false;
  if (c.size() == 1) return true;  // all singletons belong
  return gamma_star_.count(c) > 0;
}

bool Hyper::in_gamma_star(const std::vector<Token>& w) const {
  const std::vector<Token> c = canon(w);
  return c.size() >= 2 && gamma_star_.count(c) > 0;
}

namespace {

constexpr std::size_t kWebCap = 16;

// All subsets of the web with at least two elements.
template <typename Fn>
void for_each_nonsingleton_subset(const std::vector<Token>& web, Fn&& fn) {
  if (web.size() > kWebCap)
    throw std::length_error("hypercoherence web too large to enumerate");
  const std::size_t n = web.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<Token> w;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) w.push_back(web[i]);
    fn(std::move(w));
  }
}

std::vector<Token> product_web(const Hyper& x, const Hyper& y) {
  std::vector<Token> web;
  web.reserve(x.web().size() * y.web().size());
  for (const Token& a : x.web())
    for (const Token& b : y.web()) web.push_back(Token::pair(a, b));
  return web;
}

std::vector<Token> proj1(const std::vector<Token>& w) {
  std::vector<Token> out;
  out.reserve(w.size());
  for (const Token& t : w) out.push_back(t.first());
  return Hyper::canon(std::move(out));
}

std::vector<Token> proj2(const std::vector<Token>& w) {
  std::vector<Token> out;
  out.reserve(w.size());
  for (const Token& t : w) out.push_back(t.second());
  return Hyper::canon(std::move(out));
}

template <typename Member>
Hyper build(std::vector<Token> web, Member&& member) {
  std::vector<std::vector<Token>> gamma_star;
  for_each_nonsingleton_subset(web, [&](std::vector<Token> w) {
    if (member(w)) gamma_star.push_back(std::move(w));
  });
  return Hyper(std::move(web), gamma_star);
}

}  // namespace

Hyper hc_negation(const Hyper& x) {
  return build(x.web(),
               [&](const std::vector<Token>& w) { return !x.in_gamma_star(w); });
}

Hyper hc_tensor(const Hyper& x, const Hyper& y) {
  return build(product_web(x, y), [&](const std::vector<Token>& w) {
    return x.in_gamma(proj1(w)) && y.in_gamma(proj2(w));
  });
}

Hyper hc_par(const Hyper& x, const Hyper& y) {
  return hc_negation(hc_tensor(hc_negation(x), hc_negation(y)));
}

Hyper hc_before(const Hyper& x, const Hyper& y) {
  return build(product_web(x, y), [&](const std::vector<Token>& w) {
    const auto w1 = proj1(w);
    return x.in_gamma_star(w1) ||
           (w1.size() == 1 && y.in_gamma_star(proj2(w)));
  });
}

Hyper hc_lollipop(const Hyper& x, const Hyper& y) {
  return build(product_web(x, y), [&](const std::vector<Token>& w) {
    const auto w1 = proj1(w);
    const auto w2 = proj2(w);
    const bool plain = !x.in_gamma(w1) || y.in_gamma(w2);
    const bool strict = !x.in_gamma_star(w1) || y.in_gamma_star(w2);
    return plain && strict;
  });
}

bool hflag_gamma_star(const Hyper& x, std::span<const Tree> trees) {
  std::vector<Tree> family(trees.begin(), trees.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (const Tree& t : family)
    for (const PrefixPair& leaf : to_pairs(t))
      if (!x.contains(leaf.value))
        throw std::domain_error("tree token outside the hypercoherence web");
  if (family.size() < 2) return false;

  // Leaves come out in address order, so the first splitting leaf is the
  // least witness; every earlier point keeps the values equal.
  for (const MultiRefLeaf& leaf : common_refinement(std::span<const Tree>(family))) {
    const std::vector<Token> values = Hyper::canon(leaf.values);
    if (values.size() == 1) continue;
    return x.in_gamma_star(values);
  }
  return false;
}

}  // namespace pomcoh
