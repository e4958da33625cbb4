#include <doctest.h>

#include <random>

#include "pomcoh/tree.hpp"

using namespace pomcoh;

namespace {

const Token kA = Token::atom("a");
const Token kB = Token::atom("b");
const Token kC = Token::atom("c");

// First disagreement by materializing every refinement leaf and scanning
// in address order; the oracle the implementation is held against.
std::optional<BitWord> first_difference_scan(const Tree& f, const Tree& g) {
  std::vector<RefLeaf> leaves = common_refinement(f, g);
  std::sort(leaves.begin(), leaves.end(),
            [](const RefLeaf& a, const RefLeaf& b) { return word_less(a.word, b.word); });
  for (const RefLeaf& leaf : leaves)
    if (!(leaf.left == leaf.right)) return leaf.word;
  return std::nullopt;
}

}  // namespace

TEST_SUITE_BEGIN("tree");

TEST_CASE("word order pads with zeros") {
  CHECK(word_less("0", "1"));
  CHECK_FALSE(word_less("1", "10"));
  CHECK_FALSE(word_less("10", "1"));
  CHECK(word_equal("1", "10"));
  CHECK(word_less("01", "1"));
  CHECK(word_less("", "1"));
  CHECK(word_equal("", "0"));
}

TEST_CASE("normalization reaches the published normal form") {
  const Tree raw = parse_tree("<<a a> <<a b> <<a a> <b b>>>>");
  const Tree expect = parse_tree("<a <<a b> <a b>>>");
  CHECK(normalize(raw) == expect);
  CHECK(is_normal(expect));
  CHECK_FALSE(is_normal(raw));

  CHECK(normalize(Tree::leaf(kA)) == Tree::leaf(kA));
  const Tree ab = Tree::node(Tree::leaf(kA), Tree::leaf(kB));
  CHECK(normalize(ab) == ab);
}

TEST_CASE("single reduction steps agree with full normalization") {
  const Tree raw = parse_tree("<<a a> <b b>>");
  CHECK(redex_paths(raw) == std::vector<BitWord>{"0", "1"});
  const Tree once = contract_redex(raw, "0");
  CHECK(once == parse_tree("<a <b b>>"));
  CHECK(contract_redex(once, "1") == parse_tree("<a b>"));
  CHECK(normalize(raw) == parse_tree("<a b>"));
  CHECK_THROWS_AS(contract_redex(raw, "00"), std::invalid_argument);
  CHECK_THROWS_AS(contract_redex(parse_tree("<a b>"), ""), std::invalid_argument);
}

TEST_CASE("evaluation follows the bits, zero-padded") {
  const Tree f = parse_tree("<a <<a b> <a b>>>");
  CHECK(eval(f, "101") == kB);
  CHECK(eval(f, "0") == kA);
  CHECK(eval(f, "011") == kA);
  CHECK(eval(f, "1") == kA);    // 1 0^w descends into the 10 branch
  CHECK(eval(f, "111") == kB);
  CHECK(eval(Tree::leaf(kA), "") == kA);
}

TEST_CASE("pair form of the worked example") {
  const Tree f = parse_tree("<a <<a b> <a b>>>");
  const std::vector<PrefixPair> expect = {
      {"0", kA}, {"100", kA}, {"101", kB}, {"110", kA}, {"111", kB}};
  const std::vector<PrefixPair> got = to_pairs(f);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].word == expect[i].word);
    CHECK(got[i].value == expect[i].value);
  }
  CHECK(from_pairs(got) == f);
}

TEST_CASE("covers rebuild trees, merging repairable siblings") {
  CHECK(from_pairs({{"0", kA}, {"1", kA}}) == Tree::leaf(kA));
  CHECK(from_pairs({{"", kA}}) == Tree::leaf(kA));
  // overlapping words break the unique-prefix condition
  CHECK_THROWS_AS(from_pairs({{"0", kA}, {"01", kB}}), std::invalid_argument);
  CHECK_THROWS_AS(from_pairs({{"", kA}, {"1", kB}}), std::invalid_argument);
  CHECK_THROWS_AS(from_pairs({{"0", kA}, {"0", kB}, {"1", kA}}),
                  std::invalid_argument);
  // a branch left uncovered
  CHECK_THROWS_AS(from_pairs({{"0", kA}}), std::invalid_argument);
  CHECK_THROWS_AS(from_pairs({}), std::invalid_argument);
  CHECK_THROWS_AS(from_pairs({{"2", kA}}), std::invalid_argument);
}

TEST_CASE("superposition refines both trees in address order") {
  const Tree a = Tree::leaf(kA);
  auto leaves = common_refinement(a, a);
  REQUIRE(leaves.size() == 1);
  CHECK(leaves[0].word == "");

  leaves = common_refinement(a, parse_tree("<a b>"));
  REQUIRE(leaves.size() == 2);
  CHECK(leaves[0].word == "0");
  CHECK(leaves[0].left == kA);
  CHECK(leaves[0].right == kA);
  CHECK(leaves[1].word == "1");
  CHECK(leaves[1].right == kB);

  std::mt19937 rng(7);
  const Token alphabet[] = {kA, kB, kC};
  for (int i = 0; i < 200; ++i) {
    const Tree f = normalize(random_tree(alphabet, 5, rng));
    const Tree g = normalize(random_tree(alphabet, 5, rng));
    CHECK(static_cast<int>(common_refinement(f, g).size()) <=
          f.leaf_count() + g.leaf_count() - 1);
  }
}

TEST_CASE("first difference finds the least disagreement") {
  const Tree a = Tree::leaf(kA);
  CHECK_FALSE(first_difference(a, a).has_value());
  CHECK(first_difference(a, parse_tree("<a b>")) == BitWord("1"));
  CHECK(first_difference(parse_tree("<a b>"), parse_tree("<c b>")) == BitWord("0"));

  // equal as functions even when shapes differ
  CHECK_FALSE(first_difference(a, parse_tree("<a a>")).has_value());
}

TEST_CASE("first difference agrees with the leaf scan on all small pairs") {
  const Token alphabet[] = {kA, kB};
  const std::vector<Tree> trees = all_normal_trees(alphabet, 3);
  CHECK(trees.size() == 256);
  for (const Tree& f : trees)
    for (const Tree& g : trees) {
      const auto got = first_difference(f, g);
      const auto want = first_difference_scan(f, g);
      REQUIRE(got.has_value() == want.has_value());
      if (got) {
        CHECK(word_equal(*got, *want));
        CHECK(first_difference(g, f).has_value());
        CHECK(word_equal(*first_difference(g, f), *got));
        CHECK_FALSE(eval(f, *got) == eval(g, *got));
      } else {
        CHECK(f == g);  // enumerated trees are normal forms
      }
    }
}

TEST_CASE("prefix covers as text") {
  const Tree f = parse_tree("<a <<a b> <a b>>>");
  const std::string text = format_prefix_cover(to_pairs(f));
  CHECK(text == "0 a\n100 a\n101 b\n110 a\n111 b\n");
  CHECK(from_pairs(parse_prefix_cover(text)) == f);

  CHECK(format_prefix_cover(to_pairs(Tree::leaf(kA))) == ". a\n");
  CHECK(from_pairs(parse_prefix_cover(". a\n")) == Tree::leaf(kA));
  CHECK(from_pairs(parse_prefix_cover("# comment\n 0 a \n1 b")) ==
        parse_tree("<a b>"));
  CHECK_THROWS_AS(parse_prefix_cover("0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_prefix_cover("0 a b\n"), std::invalid_argument);
}

TEST_CASE("tree text round trips") {
  for (const char* text : {"a", "<a b>", "<<a b> c>", "<a <b <a c>>>"}) {
    const Tree t = parse_tree(text);
    CHECK(parse_tree(t.str()) == t);
  }
  CHECK_THROWS_AS(parse_tree("<a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree("<a b> c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree(""), std::invalid_argument);
}

TEST_CASE("enumeration counts normal trees") {
  const Token two[] = {kA, kB};
  CHECK(all_normal_trees(two, 0).size() == 2);
  CHECK(all_normal_trees(two, 1).size() == 4);
  CHECK(all_normal_trees(two, 2).size() == 16);
  const Token three[] = {kA, kB, kC};
  CHECK(all_normal_trees(three, 2).size() == 81);
  for (const Tree& t : all_normal_trees(three, 2)) CHECK(is_normal(t));
}

TEST_SUITE_END();
