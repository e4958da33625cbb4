#include <doctest.h>

#include <random>

#include "pomcoh/flag.hpp"
#include "pomcoh/suites.hpp"

using namespace pomcoh;

namespace {

const Token kA = Token::atom("a");
const Token kB = Token::atom("b");
const Token kStar = Token::atom("*");

Space one_space() { return Space({kStar}, {}); }
Space one_plus_one() { return Space({kA, kB}, {}); }
Space coherent_pair() { return Space({kA, kB}, {{kA, kB}}); }

}  // namespace

TEST_SUITE_BEGIN("flag");

TEST_CASE("flag coherence from the minimal disagreement") {
  const Tree ca = Tree::leaf(kA);
  const Tree cb = Tree::leaf(kB);
  const Tree mix = Tree::node(ca, cb);

  CHECK(flag_rel3(one_plus_one(), mix, mix) == Rel3::Equal);
  CHECK(flag_rel3(coherent_pair(), ca, cb) == Rel3::ScohStrict);
  CHECK(flag_rel3(one_plus_one(), ca, cb) == Rel3::SincohStrict);
  // first difference at address 1, values a and b, incoherent in the base
  CHECK(flag_rel3(one_plus_one(), ca, mix) == Rel3::SincohStrict);
  CHECK(flag_rel3(coherent_pair(), ca, mix) == Rel3::ScohStrict);

  CHECK_THROWS_AS(flag_rel3(one_space(), ca, ca), std::domain_error);
}

TEST_CASE("flag space membership") {
  const FlagSpace fs{one_plus_one()};
  CHECK(fs.contains(Tree::leaf(kA)));
  CHECK(fs.contains(Tree::node(Tree::leaf(kA), Tree::leaf(kB))));
  CHECK_FALSE(fs.contains(Tree::node(Tree::leaf(kA), Tree::leaf(kA))));
  CHECK_FALSE(fs.contains(Tree::leaf(kStar)));
  CHECK(fs.rel(Tree::leaf(kA), Tree::leaf(kB)) == Rel3::SincohStrict);
}

TEST_CASE("self-duality over every small pair") {
  for (const Space& base : all_spaces_on(small_web(2))) {
    const std::vector<Tree> trees = all_normal_trees(base.web(), 3);
    std::vector<std::pair<Tree, Tree>> pairs;
    for (const Tree& f : trees)
      for (const Tree& g : trees)
        if (!(f == g)) pairs.emplace_back(f, g);
    CHECK(pairs.size() == 256 * 255);
    CHECK(flag_self_duality_check(base, pairs));
  }
}

TEST_CASE("self-duality on one deep pair over a four-token base") {
  const std::vector<Token> web = small_web(4);
  const Space base(web, {{web[0], web[1]}, {web[1], web[2]}});
  std::mt19937 rng(11);
  const Tree f = normalize(random_tree(web, 6, rng));
  const Tree g = normalize(random_tree(web, 6, rng));
  const std::pair<Tree, Tree> sample[] = {{f, g}};
  CHECK(flag_self_duality_check(base, sample));
}

TEST_CASE("split and merge") {
  const Tree a = Tree::leaf(kA);
  const Tree b = Tree::leaf(kB);
  CHECK(merge(a, a) == a);
  CHECK(split(a) == std::pair(a, a));
  CHECK(merge(a, b) == Tree::node(a, b));
  CHECK(split(Tree::node(a, b)) == std::pair(a, b));
}

TEST_CASE("contraction equivalence, including the proof's one-way cases") {
  for (const Space& base : all_spaces_on(small_web(2))) {
    const std::vector<Tree> trees = all_normal_trees(base.web(), 2);
    std::vector<std::pair<Tree, Tree>> pairs;
    for (const Tree& h : trees)
      for (const Tree& g : trees) pairs.emplace_back(h, g);
    CHECK(contraction_iso_check(base, pairs));

    for (const auto& [h, g] : pairs) {
      const auto [h0, h1] = split(h);
      const auto [g0, g1] = split(g);
      if (flag_rel3(base, h0, g0) == Rel3::ScohStrict)
        CHECK(flag_rel3(base, h, g) == Rel3::ScohStrict);
      if (h0 == g0 && flag_rel3(base, h1, g1) == Rel3::ScohStrict)
        CHECK(flag_rel3(base, h, g) == Rel3::ScohStrict);
    }
  }
}

TEST_CASE("the base space is a retract of its flag space") {
  const Space base = one_plus_one();
  CHECK(retract_embed(kA) == Tree::leaf(kA));
  CHECK(retract_project(Tree::leaf(kA)) == kA);
  CHECK_FALSE(retract_project(Tree::node(Tree::leaf(kA), Tree::leaf(kB))).has_value());
  // a non-normal constant still projects
  CHECK(retract_project(Tree::node(Tree::leaf(kA), Tree::leaf(kA))) == kA);

  for (const Token& t : base.web()) CHECK(retract_project(retract_embed(t)) == t);

  // embedding a clique of the base gives a clique of the flag space
  const std::vector<Tree> image = {retract_embed(kA)};
  CHECK(is_flag_clique(base, image));
  const std::vector<Tree> pairimg = {retract_embed(kA), retract_embed(kB)};
  CHECK_FALSE(is_flag_clique(base, pairimg));  // a,b incoherent in the base
  CHECK(is_flag_clique(coherent_pair(), pairimg));
}

TEST_CASE("lifted traces: membership by superposition") {
  const Space src = one_plus_one();
  const Space tgt = one_space();
  const LinearTrace l_a = make_trace(src, tgt, {{kA, kStar}});
  const LinearTrace l_ab = make_trace(src, tgt, {{kA, kStar}, {kB, kStar}});

  const Tree mix = Tree::node(Tree::leaf(kA), Tree::leaf(kB));
  const Tree star = Tree::leaf(kStar);
  CHECK(flag_lift_contains(l_ab, mix, star));
  CHECK_FALSE(flag_lift_contains(l_a, mix, star));
  CHECK(flag_lift_contains(l_a, Tree::leaf(kA), star));

  // the lifted identity contains exactly the equal-function pairs
  const LinearTrace id = identity_trace(src);
  for (const Tree& f : all_normal_trees(src.web(), 2))
    for (const Tree& g : all_normal_trees(src.web(), 2))
      CHECK(flag_lift_contains(id, f, g) == (f == g));

  CHECK_THROWS_AS(flag_lift_contains(l_a, star, star), std::domain_error);
}

TEST_CASE("composition witnesses") {
  const Space a = one_plus_one();
  const LinearTrace id = identity_trace(a);
  const Tree mix = Tree::node(Tree::leaf(kA), Tree::leaf(kB));
  CHECK(flag_compose_witness(id, id, mix, mix) == mix);

  // constants mediated by a constant
  const Space one = one_space();
  const LinearTrace l_ab = make_trace(a, one, {{kA, kStar}, {kB, kStar}});
  const LinearTrace back = make_trace(one, a, {{kStar, kA}});
  const Tree witness =
      flag_compose_witness(l_ab, back, mix, Tree::leaf(kA));
  CHECK(witness == Tree::leaf(kStar));

  CHECK_THROWS_AS(flag_compose_witness(l_ab, back, mix, Tree::leaf(kB)),
                  std::invalid_argument);

  const std::vector<Tree> trees = all_normal_trees(a.web(), 2);
  for (const Space& b : all_spaces_on(small_web(2)))
    for (const Tree& f : trees)
      for (const Tree& h : trees) {
        const LinearTrace swap =
            make_trace(a, b, {{kA, b.web()[1]}, {kB, b.web()[0]}});
        const LinearTrace unswap =
            make_trace(b, a, {{b.web()[1], kA}, {b.web()[0], kB}});
        if (!is_linear_trace(swap) || !is_linear_trace(unswap)) continue;
        if (!flag_lift_contains(trace_compose(swap, unswap), f, h)) continue;
        const Tree g = flag_compose_witness(swap, unswap, f, h);
        CHECK(flag_lift_contains(swap, f, g));
        CHECK(flag_lift_contains(unswap, g, h));
      }
}

TEST_CASE("no candidate counit survives the naturality squares") {
  const NoCounitReport report = verify_no_counit();
  CHECK(report.survivors == 0);
  CHECK(report.candidates.size() == 128);

  int counit_kills = 0;
  for (const NoCounitCandidate& c : report.candidates) {
    CHECK_FALSE(c.killed_by.empty());
    if (c.killed_by == "counit law") {
      ++counit_kills;
      CHECK(c.mapping.empty());
      CHECK_FALSE(c.r1_identity);
    }
    if (c.r1_identity && c.mapping == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}})
      CHECK(c.killed_by == "square ab");
    bool maps_const_a = false;
    for (const auto& [i, y] : c.mapping) maps_const_a |= (i == 0 && y == 0);
    if (c.r1_identity && !maps_const_a) CHECK(c.killed_by == "square a");
  }
  CHECK(counit_kills == 1);
}

TEST_SUITE_END();
