#include <doctest.h>

#include "pomcoh/hyper.hpp"
#include "pomcoh/suites.hpp"

using namespace pomcoh;

namespace {

const Token kX = Token::atom("x");
const Token kY = Token::atom("y");

Hyper tight() { return Hyper({kX, kY}, {{{kX, kY}}}); }  // {x,y} coherent
Hyper loose() { return Hyper({kX, kY}, {}); }            // {x,y} not coherent

}  // namespace

TEST_SUITE_BEGIN("hyper");

TEST_CASE("construction keeps singletons implicit and validates members") {
  const Hyper h = tight();
  CHECK(h.in_gamma({kX}));
  CHECK(h.in_gamma({kX, kY}));
  CHECK_FALSE(h.in_gamma_star({kX}));
  CHECK(h.in_gamma_star({kX, kY}));
  CHECK_FALSE(loose().in_gamma({kX, kY}));
  CHECK_FALSE(h.in_gamma({}));

  CHECK_THROWS_AS(Hyper({kX, kY}, {{{kX}}}), std::invalid_argument);
  CHECK_THROWS_AS(Hyper({kX}, {{{kX, kY}}}), std::invalid_argument);
}

TEST_CASE("negation complements the strict part") {
  CHECK(hc_negation(tight()) == loose());
  CHECK(hc_negation(hc_negation(tight())) == tight());
  CHECK(hc_negation(tight()).in_gamma({kX}));
  CHECK(tight().in_gamma_star({kX, kY}) !=
        hc_negation(tight()).in_gamma_star({kX, kY}));
}

TEST_CASE("tensor goes through both projections") {
  const Hyper t = hc_tensor(tight(), loose());
  for (const Token& u : t.web()) CHECK(t.in_gamma({u}));
  // second projection of {(x,x),(y,y)} is {x,y}, not coherent in the loose factor
  CHECK_FALSE(t.in_gamma({Token::pair(kX, kX), Token::pair(kY, kY)}));
  // keeping the second component fixed leaves a singleton projection
  CHECK(t.in_gamma({Token::pair(kX, kX), Token::pair(kY, kX)}));
}

TEST_CASE("linear maps match the double-negation route") {
  const Hyper spaces[] = {tight(), loose()};
  for (const Hyper& x : spaces)
    for (const Hyper& y : spaces)
      CHECK(hc_lollipop(x, y) == hc_negation(hc_tensor(x, hc_negation(y))));

  // strictly coherent input needs a strictly coherent output set
  const Hyper map = hc_lollipop(tight(), loose());
  CHECK_FALSE(map.in_gamma({Token::pair(kX, kX), Token::pair(kY, kX)}));
  CHECK(map.in_gamma({Token::pair(kX, kX)}));
}

TEST_CASE("before admits a strict head or a steady head with strict tail") {
  const Hyper b = hc_before(loose(), tight());
  // first projection steady, second strictly coherent
  CHECK(b.in_gamma_star({Token::pair(kX, kX), Token::pair(kX, kY)}));
  // first projection splits incoherently
  CHECK_FALSE(b.in_gamma_star({Token::pair(kX, kX), Token::pair(kY, kX)}));

  const Hyper spaces[] = {tight(), loose()};
  for (const Hyper& x : spaces)
    for (const Hyper& y : spaces)
      CHECK(hc_negation(hc_before(x, y)) ==
            hc_before(hc_negation(x), hc_negation(y)));
}

TEST_CASE("flag coherence of tree families") {
  const Tree cx = Tree::leaf(kX);
  const Tree cy = Tree::leaf(kY);
  const Tree mix = Tree::node(cx, cy);

  const Tree single[] = {cx};
  CHECK_FALSE(hflag_gamma_star(tight(), single));
  const Tree same_function[] = {cx, Tree::node(cx, cx)};
  CHECK_FALSE(hflag_gamma_star(tight(), same_function));

  const Tree pair_const[] = {cx, cy};
  CHECK(hflag_gamma_star(tight(), pair_const));
  CHECK_FALSE(hflag_gamma_star(loose(), pair_const));

  // first split at address 1 decides
  const Tree late_split[] = {cx, mix};
  CHECK(hflag_gamma_star(tight(), late_split));
  CHECK_FALSE(hflag_gamma_star(loose(), late_split));

  const Tree foreign[] = {Tree::leaf(Token::atom("q")), cx};
  CHECK_THROWS_AS(hflag_gamma_star(tight(), foreign), std::domain_error);
}

TEST_SUITE_END();
