#include "pomcoh/flag.hpp"

#include <stdexcept>

namespace pomcoh {

namespace {

void check_tokens_within(const Tree& t, const Space& space) {
  if (t.is_leaf()) {
    if (!space.contains(t.token()))
      throw std::domain_error("tree token outside the web: " + t.token().str());
    return;
  }
  check_tokens_within(t.left(), space);
  check_tokens_within(t.right(), space);
}

bool tokens_within(const Tree& t, const Space& space) {
  if (t.is_leaf()) return space.contains(t.token());
  return tokens_within(t.left(), space) && tokens_within(t.right(), space);
}

}  // namespace

Rel3 flag_rel3(const Space& base, const Tree& f, const Tree& g) {
  check_tokens_within(f, base);
  check_tokens_within(g, base);
  const auto diff = first_difference_values(f, g);
  if (!diff) return Rel3::Equal;
  const auto& [word, fv, gv] = *diff;
  return base.rel(fv, gv) == Rel3::ScohStrict ? Rel3::ScohStrict
                                              : Rel3::SincohStrict;
}

bool FlagSpace::contains(const Tree& t) const {
  return is_normal(t) && tokens_within(t, base);
}

bool is_flag_clique(const Space& base, std::span<const Tree> trees) {
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      if (flag_rel3(base, trees[i], trees[j]) == Rel3::SincohStrict) return false;
  return true;
}

std::pair<Tree, Tree> split(const Tree& h) {
  if (h.is_leaf()) return {h, h};
  return {h.left(), h.right()};
}

Tree merge(const Tree& h0, const Tree& h1) {
  return normalize(Tree::node(h0, h1));
}

Rel3 flag_before_rel3(const Space& base, const std::pair<Tree, Tree>& h,
                      const std::pair<Tree, Tree>& g) {
  return rel3_before(flag_rel3(base, h.first, g.first),
                     flag_rel3(base, h.second, g.second));
}

bool flag_self_duality_check(const Space& base,
                             std::span<const std::pair<Tree, Tree>> samples) {
  const Space dual = negation(base);
  for (const auto& [f, g] : samples) {
    const Rel3 r = flag_rel3(base, f, g);
    const Rel3 rd = flag_rel3(dual, f, g);
    if (r == Rel3::Equal || rd == Rel3::Equal) {
      if (r != rd) return false;
      continue;
    }
    if ((r == Rel3::ScohStrict) == (rd == Rel3::ScohStrict)) return false;
  }
  return true;
}

bool contraction_iso_check(const Space& base,
                           std::span<const std::pair<Tree, Tree>> samples) {
  for (const auto& [h, g] : samples)
    if (flag_rel3(base, h, g) != flag_before_rel3(base, split(h), split(g)))
      return false;
  return true;
}

Tree retract_embed(const Token& a) { return Tree::leaf(a); }

std::optional<Token> retract_project(const Tree& t) {
  const Tree n = normalize(t);
  if (!n.is_leaf()) return std::nullopt;
  return n.token();
}

bool flag_lift_contains(const LinearTrace& l, const Tree& f, const Tree& g) {
  if (!tokens_within(f, l.source) || !tokens_within(g, l.target))
    throw std::domain_error("lifted trace: tree alphabet mismatch");
  for (const RefLeaf& leaf : common_refinement(f, g))
    if (!l.pairs.count({leaf.left, leaf.right})) return false;
  return true;
}

namespace {

Tree witness_tree(const Tree& f, const Tree& h, const LinearTrace& l1,
                  const LinearTrace& l2) {
  if (f.is_leaf() && h.is_leaf()) {
    for (const Token& b : l1.target.web())
      if (l1.pairs.count({f.token(), b}) && l2.pairs.count({b, h.token()}))
        return Tree::leaf(b);
    throw std::logic_error("no middle token despite composite membership");
  }
  const auto [f0, f1] = split(f);
  const auto [h0, h1] = split(h);
  return Tree::node(witness_tree(f0, h0, l1, l2), witness_tree(f1, h1, l1, l2));
}

}  // namespace

Tree flag_compose_witness(const LinearTrace& l1, const LinearTrace& l2,
                          const Tree& f, const Tree& h) {
  if (!(l1.target == l2.source))
    throw std::invalid_argument("composition witness: middle spaces differ");
  if (!flag_lift_contains(trace_compose(l1, l2), f, h))
    throw std::invalid_argument(
        "composition witness: pair is not in the lifted composite");
  return normalize(witness_tree(f, h, l1, l2));
}

NoCounitReport verify_no_counit() {
  const Token a = Token::atom("a");
  const Token b = Token::atom("b");
  const Token star = Token::atom("*");
  const Space one_plus_one({a, b}, {});  // a strictly incoherent with b
  const Space one({star}, {});
  const Token targets[2] = {a, b};

  const LinearTrace maps[3] = {
      make_trace(one_plus_one, one, {{a, star}}),           // l_a
      make_trace(one_plus_one, one, {{b, star}}),           // l_b
      make_trace(one_plus_one, one, {{a, star}, {b, star}})  // l_ab
  };
  const char* square_names[3] = {"square a", "square b", "square ab"};

  NoCounitReport report;
  report.fragment = {Tree::leaf(a), Tree::leaf(b),
                     Tree::node(Tree::leaf(a), Tree::leaf(b))};
  // The only continuous function into the one-token web.
  const Tree star_tree = Tree::leaf(star);

  for (int r1 = 0; r1 <= 1; ++r1) {
    for (unsigned mask = 0; mask < 64; ++mask) {
      NoCounitCandidate cand;
      cand.r1_identity = r1 == 1;
      for (int i = 0; i < 3; ++i)
        for (int y = 0; y < 2; ++y)
          if (mask & (1u << (i * 2 + y))) cand.mapping.emplace_back(i, y);

      std::string desc = "r={";
      for (std::size_t k = 0; k < cand.mapping.size(); ++k) {
        const auto& [i, y] = cand.mapping[k];
        if (k) desc += ", ";
        desc += "(" + report.fragment[static_cast<std::size_t>(i)].str() + " -> " +
                targets[y].str() + ")";
      }
      desc += std::string("}, r1=") + (cand.r1_identity ? "Id" : "empty");
      cand.description = desc;

      for (int x = 0; x < 3 && cand.killed_by.empty(); ++x) {
        for (int i = 0; i < 3; ++i) {
          const Tree& f = report.fragment[static_cast<std::size_t>(i)];
          // r1 o flag(l_x): goes through the unique tree over the one-token web.
          const bool lhs =
              cand.r1_identity && flag_lift_contains(maps[x], f, star_tree);
          // l_x o r: some candidate image of f lies in the domain of l_x.
          bool rhs = false;
          for (const auto& [j, y] : cand.mapping)
            if (j == i && maps[x].pairs.count({targets[y], star})) rhs = true;
          if (lhs != rhs) {
            cand.killed_by = square_names[x];
            break;
          }
        }
      }
      if (cand.killed_by.empty() && cand.mapping.empty() && !cand.r1_identity) {
        // The all-empty family does satisfy the squares, but a comonad
        // counit composed with duplication must give the identity of
        // flag A, which is nonempty.
        cand.killed_by = "counit law";
      }
      if (cand.killed_by.empty()) ++report.survivors;
      report.candidates.push_back(std::move(cand));
    }
  }
  return report;
}

}  // namespace pomcoh
