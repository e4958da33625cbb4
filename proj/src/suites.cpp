#include "pomcoh/suites.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#include "pomcoh/flag.hpp"
#include "pomcoh/hyper.hpp"
#include "pomcoh/proofnet.hpp"
#include "pomcoh/space.hpp"
#include "pomcoh/trace.hpp"
#include "pomcoh/tree.hpp"

namespace pomcoh {

void SuiteConfig::validate() const {
  if (tree_depth < 0 || web_cap == 0 || circuit_cap == 0 || random_rounds < 0)
    throw std::invalid_argument("suite bounds must be positive");
}

std::vector<std::string> suite_names() {
  return {"before", "flag", "functor", "nomonad", "hyper", "nets"};
}

std::vector<Token> small_web(int size) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (size < 1 || size > 4) throw std::invalid_argument("small_web supports 1..4");
  std::vector<Token> web;
  for (int i = 0; i < size; ++i) web.push_back(Token::atom(names[i]));
  return web;
}

std::vector<Space> all_spaces_on(const std::vector<Token>& web) {
  std::vector<std::pair<Token, Token>> slots;
  for (std::size_t i = 0; i < web.size(); ++i)
    for (std::size_t j = i + 1; j < web.size(); ++j) slots.emplace_back(web[i], web[j]);
  std::vector<Space> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Token, Token>> scoh;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask & (std::size_t{1} << k)) scoh.push_back(slots[k]);
    out.emplace_back(web, scoh);
  }
  return out;
}

namespace {

using Check = std::function<std::optional<std::string>()>;

void run_check(std::vector<PropertyResult>& out, const std::string& name,
               const Check& body) {
  PropertyResult r;
  r.name = name;
  const auto witness = body();
  r.pass = !witness.has_value();
  if (witness) r.witness = *witness;
  out.push_back(std::move(r));
}

// Spaces on 1..max_tokens tokens, every strict-coherence choice.
std::vector<Space> component_family(int max_tokens) {
  std::vector<Space> out;
  for (int n = 1; n <= max_tokens; ++n)
    for (Space& s : all_spaces_on(small_web(n))) out.push_back(std::move(s));
  return out;
}

std::vector<TokenSet> all_subsets(const std::vector<Token>& web) {
  std::vector<TokenSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << web.size()); ++mask) {
    TokenSet s;
    for (std::size_t i = 0; i < web.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.insert(web[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<LinearTrace> all_linear_traces(const Space& a, const Space& b) {
  std::vector<std::pair<Token, Token>> slots;
  for (const Token& x : a.web())
    for (const Token& y : b.web()) slots.emplace_back(x, y);
  if (slots.size() > 16)
    throw std::length_error("trace enumeration limited to small webs");
  std::vector<LinearTrace> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::set<std::pair<Token, Token>> pairs;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask & (std::size_t{1} << k)) pairs.insert(slots[k]);
    LinearTrace t{a, b, std::move(pairs)};
    if (is_linear_trace(t)) out.push_back(std::move(t));
  }
  return out;
}

std::string describe_pair(const Tree& f, const Tree& g) {
  return f.str() + " / " + g.str();
}

// ---------------------------------------------------------------- before --

std::vector<PropertyResult> suite_before(const SuiteConfig& cfg) {
  std::vector<PropertyResult> out;
  const std::vector<Space> family3 = component_family(3);
  const std::vector<Space> family2 = component_family(2);

  run_check(out, "token pairs classify exclusively", [&]() -> std::optional<std::string> {
    for (const Space& s : family3)
      for (const Token& a : s.web())
        for (const Token& b : s.web())
          if ((a == b) != (s.rel(a, b) == Rel3::Equal))
            return a.str() + " vs " + b.str();
    return std::nullopt;
  });

  run_check(out, "double negation is the identity", [&]() -> std::optional<std::string> {
    for (const Space& s : family3)
      if (!(negation(negation(s)) == s)) return "space on " + std::to_string(s.size());
    return std::nullopt;
  });

  auto demorgan = [&](const char* name, Space (*make)(const Space&, const Space&),
                      Space (*dual_make)(const Space&, const Space&)) {
    run_check(out, name, [&, make, dual_make]() -> std::optional<std::string> {
      for (const Space& a : family3)
        for (const Space& b : family3)
          if (!(negation(make(a, b)) == dual_make(negation(a), negation(b))))
            return "webs " + std::to_string(a.size()) + "x" + std::to_string(b.size());
      return std::nullopt;
    });
  };
  demorgan("negation exchanges par and tensor", par, tensor);
  demorgan("negation exchanges tensor and par", tensor, par);
  demorgan("negation fixes before", before, before);

  run_check(out, "cliques nest: tensor within before within par",
            [&]() -> std::optional<std::string> {
              for (const Space& a : family2)
                for (const Space& b : family2) {
                  const Space t = tensor(a, b), bf = before(a, b), p = par(a, b);
                  for (const TokenSet& s : all_subsets(t.web())) {
                    if (is_clique(t, s) && !is_clique(bf, s))
                      return "tensor clique escapes before";
                    if (is_clique(bf, s) && !is_clique(p, s))
                      return "before clique escapes par";
                  }
                }
              return std::nullopt;
            });

  const Space coh2 = Space(small_web(2), {{small_web(2)[0], small_web(2)[1]}});
  const Space incoh2 = Space(small_web(2), {});
  const std::vector<Token> xyz = small_web(3);
  const Space mix3 = Space(xyz, {{xyz[0], xyz[1]}});

  run_check(out, "before does not commute", [&]() -> std::optional<std::string> {
    if (spaces_isomorphic(before(coh2, incoh2), before(incoh2, coh2), cfg.web_cap))
      return "unexpected isomorphism";
    if (!spaces_isomorphic(before(coh2, incoh2), before(coh2, incoh2), cfg.web_cap))
      return "identity isomorphism missed";
    return std::nullopt;
  });

  run_check(out, "before associates through the re-pairing trace",
            [&]() -> std::optional<std::string> {
              const LinearTrace iso = before_assoc_iso(coh2, incoh2, mix3);
              const LinearTrace inv = transpose(iso);
              if (!is_linear_trace(iso) || !is_linear_trace(inv)) return "trace not linear";
              if (!(trace_compose(iso, inv) == identity_trace(iso.source)))
                return "iso ; inverse is not the identity";
              if (!(trace_compose(inv, iso) == identity_trace(iso.target)))
                return "inverse ; iso is not the identity";
              std::map<Token, Token> to;
              for (const auto& [s, t] : iso.pairs) to.emplace(s, t);
              for (const Token& u : iso.source.web())
                for (const Token& v : iso.source.web())
                  if (iso.source.rel(u, v) != iso.target.rel(to.at(u), to.at(v)))
                    return "re-pairing changes a relation at " + u.str();
              return std::nullopt;
            });

  run_check(out, "tensor-to-before and before-to-par are linear",
            [&]() -> std::optional<std::string> {
              for (const Space& a : family2)
                for (const Space& b : family2) {
                  if (!is_linear_trace(tensor_to_before(a, b)))
                    return "tensor-to-before fails";
                  if (!is_linear_trace(before_to_par(a, b)))
                    return "before-to-par fails";
                }
              return std::nullopt;
            });

  run_check(out, "sp orders specialize to the connectives",
            [&]() -> std::optional<std::string> {
              const SpOrder leaf0 = SpOrder::leaf(0);
              const SpOrder s01 = SpOrder::series(SpOrder::leaf(0), SpOrder::leaf(1));
              const SpOrder p01 = SpOrder::parallel(SpOrder::leaf(0), SpOrder::leaf(1));
              for (const Space& a : family2) {
                const Space only[] = {a};
                if (!(sp_space(leaf0, only) == a)) return "single leaf";
                for (const Space& b : family2) {
                  const Space pairab[] = {a, b};
                  if (!(sp_space(s01, pairab) == before(a, b))) return "series vs before";
                  if (!(sp_space(p01, pairab) == par(a, b))) return "parallel vs par";
                }
              }
              return std::nullopt;
            });

  run_check(out, "sp order associativity matches the re-pairing",
            [&]() -> std::optional<std::string> {
              const SpOrder rightgrp = SpOrder::series(
                  SpOrder::leaf(0), SpOrder::series(SpOrder::leaf(1), SpOrder::leaf(2)));
              const SpOrder leftgrp = SpOrder::series(
                  SpOrder::series(SpOrder::leaf(0), SpOrder::leaf(1)), SpOrder::leaf(2));
              const Space comps[] = {coh2, incoh2, mix3};
              const Space r = sp_space(rightgrp, comps);
              const Space l = sp_space(leftgrp, comps);
              std::map<Token, Token> to;
              for (const auto& [s, t] : before_assoc_iso(coh2, incoh2, mix3).pairs)
                to.emplace(s, t);
              for (const Token& u : r.web())
                for (const Token& v : r.web())
                  if (r.rel(u, v) != l.rel(to.at(u), to.at(v)))
                    return "relation differs at " + u.str();
              return std::nullopt;
            });

  run_check(out, "after swaps before", [&]() -> std::optional<std::string> {
    for (const Space& a : family2)
      for (const Space& b : family2) {
        const Space ab = after(a, b);
        const Space ba = before(b, a);
        for (const Token& u : ab.web())
          for (const Token& v : ab.web()) {
            const Token su = Token::pair(u.second(), u.first());
            const Token sv = Token::pair(v.second(), v.first());
            if (ab.rel(u, v) != ba.rel(su, sv)) return "after mismatch at " + u.str();
          }
      }
    return std::nullopt;
  });

  run_check(out, "linear map space is dual input par output",
            [&]() -> std::optional<std::string> {
              for (const Space& a : family2)
                for (const Space& b : family2)
                  if (!(lollipop(a, b) == par(negation(a), b))) return "mismatch";
              return std::nullopt;
            });

  run_check(out, "traces compose, stay linear, and preserve cliques",
            [&]() -> std::optional<std::string> {
              const Space spaces[] = {coh2, incoh2};
              for (const Space& a : spaces)
                for (const Space& b : spaces) {
                  for (const LinearTrace& t : all_linear_traces(a, b)) {
                    if (!(trace_compose(identity_trace(a), t) == t))
                      return "left identity fails";
                    if (!(trace_compose(t, identity_trace(b)) == t))
                      return "right identity fails";
                    for (const TokenSet& x : all_subsets(a.web())) {
                      if (!is_clique(a, x)) continue;
                      if (!is_clique(b, trace_apply(t, x)))
                        return "image of a clique is not a clique";
                    }
                    for (const Space& c : spaces)
                      for (const LinearTrace& u : all_linear_traces(b, c))
                        if (!is_linear_trace(trace_compose(t, u)))
                          return "composite not linear";
                  }
                }
              return std::nullopt;
            });

  return out;
}

// ------------------------------------------------------------------ flag --

struct TreeBench {
  Space space;
  std::vector<Tree> trees;
};

std::vector<TreeBench> tree_benches(int tree_depth) {
  std::vector<TreeBench> out;
  for (int n = 2; n <= 3; ++n) {
    const std::vector<Token> web = small_web(n);
    const std::vector<Tree> trees = all_normal_trees(web, tree_depth);
    for (const Space& s : all_spaces_on(web)) out.push_back({s, trees});
  }
  return out;
}

std::vector<PropertyResult> suite_flag(const SuiteConfig& cfg) {
  std::vector<PropertyResult> out;
  const std::vector<TreeBench> benches = tree_benches(cfg.tree_depth);
  const std::vector<Token> xyz = small_web(3);

  run_check(out, "normalization worked example", [&]() -> std::optional<std::string> {
    const Tree raw = parse_tree("<<a a> <<a b> <<a a> <b b>>>>");
    const Tree expect = parse_tree("<a <<a b> <a b>>>");
    if (!(normalize(raw) == expect)) return normalize(raw).str();
    return std::nullopt;
  });

  run_check(out, "normalization is idempotent and shrinking",
            [&]() -> std::optional<std::string> {
              std::mt19937 rng(cfg.seed);
              for (int i = 0; i < cfg.random_rounds; ++i) {
                const Tree t = random_tree(xyz, 5, rng);
                const Tree n = normalize(t);
                if (!is_normal(n)) return t.str();
                if (!(normalize(n) == n)) return t.str();
                if (n.leaf_count() > t.leaf_count()) return t.str();
              }
              return std::nullopt;
            });

  run_check(out, "random reduction orders reach one normal form",
            [&]() -> std::optional<std::string> {
              std::mt19937 rng(cfg.seed + 1);
              for (int i = 0; i < cfg.random_rounds; ++i) {
                const Tree t = random_tree(xyz, 5, rng);
                Tree cur = t;
                for (;;) {
                  const std::vector<BitWord> redexes = redex_paths(cur);
                  if (redexes.empty()) break;
                  std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
                  cur = contract_redex(cur, redexes[pick(rng)]);
                }
                if (!(cur == normalize(t))) return t.str();
              }
              return std::nullopt;
            });

  run_check(out, "pair form round-trips and satisfies the cover conditions",
            [&]() -> std::optional<std::string> {
              for (const Tree& t : all_normal_trees(xyz, cfg.tree_depth)) {
                const std::vector<PrefixPair> cover = to_pairs(t);
                for (std::size_t i = 0; i < cover.size(); ++i)
                  for (std::size_t j = 0; j < cover.size(); ++j) {
                    if (i == j) continue;
                    if (cover[j].word.starts_with(cover[i].word))
                      return "overlapping cover from " + t.str();
                    // sibling words must carry distinct tokens
                    const BitWord& a = cover[i].word;
                    const BitWord& b = cover[j].word;
                    if (a.size() == b.size() && !a.empty() &&
                        a.substr(0, a.size() - 1) == b.substr(0, b.size() - 1) &&
                        a != b && cover[i].value == cover[j].value)
                      return "mergeable siblings from " + t.str();
                  }
                if (!(from_pairs(cover) == t)) return t.str();
              }
              return std::nullopt;
            });

  run_check(out, "evaluation agrees with the prefix cover",
            [&]() -> std::optional<std::string> {
              for (const Tree& t : all_normal_trees(xyz, cfg.tree_depth))
                for (const PrefixPair& p : to_pairs(t)) {
                  if (!(eval(t, p.word) == p.value)) return t.str() + " at " + p.word;
                  if (!(eval(t, p.word + "1") == p.value))
                    return t.str() + " at " + p.word + "1";
                }
              return std::nullopt;
            });

  run_check(out, "first difference scans the refinement in order",
            [&]() -> std::optional<std::string> {
              const std::vector<Tree> trees = all_normal_trees(small_web(2), cfg.tree_depth);
              for (const Tree& f : trees)
                for (const Tree& g : trees) {
                  const auto got = first_difference(f, g);
                  const auto sym = first_difference(g, f);
                  if (got.has_value() != sym.has_value() ||
                      (got && !word_equal(*got, *sym)))
                    return "asymmetry on " + describe_pair(f, g);
                  std::optional<BitWord> want;
                  for (const RefLeaf& leaf : common_refinement(f, g))
                    if (!(leaf.left == leaf.right)) {
                      want = leaf.word;
                      break;
                    }
                  if (got.has_value() != want.has_value() ||
                      (got && !word_equal(*got, *want)))
                    return describe_pair(f, g);
                  if (!got && !(normalize(f) == normalize(g)))
                    return "missed difference on " + describe_pair(f, g);
                  if (got && eval(f, *got) == eval(g, *got))
                    return "no disagreement at witness for " + describe_pair(f, g);
                }
              return std::nullopt;
            });

  run_check(out, "flag coherence is symmetric, equal only on equal functions",
            [&]() -> std::optional<std::string> {
              for (const TreeBench& bench : benches)
                for (const Tree& f : bench.trees)
                  for (const Tree& g : bench.trees) {
                    const Rel3 r = flag_rel3(bench.space, f, g);
                    if (r != flag_rel3(bench.space, g, f))
                      return describe_pair(f, g);
                    if ((r == Rel3::Equal) != (f == g)) return describe_pair(f, g);
                  }
              return std::nullopt;
            });

  run_check(out, "minimal disagreement point decides coherence",
            [&]() -> std::optional<std::string> {
              for (const TreeBench& bench : benches)
                for (const Tree& f : bench.trees)
                  for (const Tree& g : bench.trees) {
                    if (f == g) continue;
                    // witness semantics, spelled out over all leaves
                    bool strict = false;
                    const auto leaves = common_refinement(f, g);
                    for (std::size_t i = 0; i < leaves.size() && !strict; ++i) {
                      if (leaves[i].left == leaves[i].right) continue;
                      bool earlier_equal = true;
                      for (std::size_t j = 0; j < i; ++j)
                        earlier_equal =
                            earlier_equal && leaves[j].left == leaves[j].right;
                      strict = earlier_equal &&
                               bench.space.rel(leaves[i].left, leaves[i].right) ==
                                   Rel3::ScohStrict;
                    }
                    if (strict != (flag_rel3(bench.space, f, g) == Rel3::ScohStrict))
                      return describe_pair(f, g);
                  }
              return std::nullopt;
            });

  run_check(out, "flag is self-dual", [&]() -> std::optional<std::string> {
    for (const TreeBench& bench : benches) {
      std::vector<std::pair<Tree, Tree>> pairs;
      for (const Tree& f : bench.trees)
        for (const Tree& g : bench.trees)
          if (!(f == g)) pairs.emplace_back(f, g);
      if (!flag_self_duality_check(bench.space, pairs)) return "self-duality fails";
    }
    return std::nullopt;
  });

  run_check(out, "splitting is a coherence isomorphism",
            [&]() -> std::optional<std::string> {
              for (const TreeBench& bench : benches) {
                std::vector<std::pair<Tree, Tree>> pairs;
                for (const Tree& f : bench.trees)
                  for (const Tree& g : bench.trees) pairs.emplace_back(f, g);
                if (!contraction_iso_check(bench.space, pairs))
                  return "contraction equivalence fails";
              }
              return std::nullopt;
            });

  run_check(out, "merge and split invert each other",
            [&]() -> std::optional<std::string> {
              const std::vector<Tree> trees = all_normal_trees(xyz, cfg.tree_depth);
              for (const Tree& h : trees)
                if (!(merge(split(h).first, split(h).second) == h)) return h.str();
              for (const Tree& a : trees)
                for (const Tree& b : trees) {
                  const auto [sa, sb] = split(merge(a, b));
                  if (!(sa == a) || !(sb == b)) return describe_pair(a, b);
                }
              return std::nullopt;
            });

  run_check(out, "constants embed the base space and project back",
            [&]() -> std::optional<std::string> {
              for (const TreeBench& bench : benches) {
                for (const Token& a : bench.space.web()) {
                  const auto back = retract_project(retract_embed(a));
                  if (!back || !(*back == a)) return a.str();
                }
                for (const Token& a : bench.space.web())
                  for (const Token& b : bench.space.web()) {
                    if (flag_rel3(bench.space, retract_embed(a), retract_embed(b)) !=
                        bench.space.rel(a, b))
                      return "embedding changes a relation";
                  }
                for (const Tree& t : bench.trees) {
                  const bool constant = t.is_leaf();
                  if (retract_project(t).has_value() != constant) return t.str();
                }
              }
              return std::nullopt;
            });

  run_check(out, "embedded cliques stay cliques", [&]() -> std::optional<std::string> {
    for (const TreeBench& bench : benches)
      for (const TokenSet& x : all_subsets(bench.space.web())) {
        if (!is_clique(bench.space, x)) continue;
        std::vector<Tree> image;
        for (const Token& a : x) image.push_back(retract_embed(a));
        if (!is_flag_clique(bench.space, image)) return "image not a clique";
      }
    return std::nullopt;
  });

  return out;
}

// --------------------------------------------------------------- functor --

std::vector<PropertyResult> suite_functor(const SuiteConfig& cfg) {
  std::vector<PropertyResult> out;
  const std::vector<Space> spaces = all_spaces_on(small_web(2));
  const std::vector<Tree> trees = all_normal_trees(small_web(2), cfg.tree_depth);

  run_check(out, "lifting the identity gives the identity",
            [&]() -> std::optional<std::string> {
              for (const Space& a : spaces) {
                const LinearTrace id = identity_trace(a);
                for (const Tree& f : trees)
                  for (const Tree& g : trees)
                    if (flag_lift_contains(id, f, g) != !first_difference(f, g))
                      return describe_pair(f, g);
              }
              return std::nullopt;
            });

  run_check(out, "lifted traces are linear", [&]() -> std::optional<std::string> {
    for (const Space& a : spaces)
      for (const Space& b : spaces)
        for (const LinearTrace& t : all_linear_traces(a, b)) {
          std::vector<std::pair<Tree, Tree>> members;
          for (const Tree& f : trees)
            for (const Tree& g : trees)
              if (flag_lift_contains(t, f, g)) members.emplace_back(f, g);
          for (const auto& [f, g] : members)
            for (const auto& [f2, g2] : members)
              if (rel3_lollipop(flag_rel3(a, f, f2), flag_rel3(b, g, g2)) ==
                  Rel3::SincohStrict)
                return describe_pair(f, g) + " with " + describe_pair(f2, g2);
        }
    return std::nullopt;
  });

  run_check(out, "lifting commutes with composition",
            [&]() -> std::optional<std::string> {
              for (const Space& a : spaces)
                for (const Space& b : spaces)
                  for (const Space& c : spaces)
                    for (const LinearTrace& l1 : all_linear_traces(a, b))
                      for (const LinearTrace& l2 : all_linear_traces(b, c)) {
                        const LinearTrace comp = trace_compose(l1, l2);
                        for (const Tree& f : trees)
                          for (const Tree& h : trees) {
                            const bool lifted = flag_lift_contains(comp, f, h);
                            bool mediated = false;
                            for (const Tree& g : trees)
                              if (flag_lift_contains(l1, f, g) &&
                                  flag_lift_contains(l2, g, h)) {
                                mediated = true;
                                break;
                              }
                            if (mediated != lifted) return describe_pair(f, h);
                            if (lifted) {
                              const Tree g = flag_compose_witness(l1, l2, f, h);
                              if (!is_normal(g)) return "witness not normal";
                              if (!flag_lift_contains(l1, f, g) ||
                                  !flag_lift_contains(l2, g, h))
                                return "witness fails membership on " +
                                       describe_pair(f, h);
                            }
                          }
                      }
              return std::nullopt;
            });

  return out;
}

// --------------------------------------------------------------- nomonad --

std::vector<PropertyResult> suite_nomonad(const SuiteConfig&) {
  std::vector<PropertyResult> out;
  const NoCounitReport report = verify_no_counit();

  out.push_back(PropertyResult{
      "no candidate counit survives", report.survivors == 0,
      std::to_string(report.survivors) + " of " +
          std::to_string(report.candidates.size()) + " candidates survive"});

  run_check(out, "the constant-wise candidate dies on the joint square",
            [&]() -> std::optional<std::string> {
              for (const NoCounitCandidate& c : report.candidates) {
                if (!c.r1_identity) continue;
                if (c.mapping != std::vector<std::pair<int, int>>{{0, 0}, {1, 1}})
                  continue;
                if (c.killed_by != "square ab") return c.killed_by;
                return std::nullopt;
              }
              return "candidate not enumerated";
            });

  run_check(out, "dropping the first constant dies on its own square",
            [&]() -> std::optional<std::string> {
              for (const NoCounitCandidate& c : report.candidates) {
                if (!c.r1_identity) continue;
                bool maps_a = false;
                for (const auto& [i, y] : c.mapping) maps_a = maps_a || (i == 0 && y == 0);
                if (maps_a) continue;
                if (c.killed_by != "square a") return c.description;
              }
              return std::nullopt;
            });

  run_check(out, "only the empty family needs the counit law",
            [&]() -> std::optional<std::string> {
              int counit_kills = 0;
              for (const NoCounitCandidate& c : report.candidates)
                if (c.killed_by == "counit law") {
                  ++counit_kills;
                  if (!c.mapping.empty() || c.r1_identity) return c.description;
                }
              if (counit_kills != 1) return std::to_string(counit_kills) + " kills";
              return std::nullopt;
            });

  run_check(out, "full enumeration size", [&]() -> std::optional<std::string> {
    if (report.candidates.size() != 128)
      return std::to_string(report.candidates.size());
    return std::nullopt;
  });

  return out;
}

// ----------------------------------------------------------------- hyper --

std::vector<Hyper> all_hypers_on(const std::vector<Token>& web) {
  std::vector<std::vector<Token>> slots;
  const std::size_t n = web.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<Token> w;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) w.push_back(web[i]);
    slots.push_back(std::move(w));
  }
  std::vector<Hyper> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<Token>> gamma;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask & (std::size_t{1} << k)) gamma.push_back(slots[k]);
    out.emplace_back(web, gamma);
  }
  return out;
}

std::vector<PropertyResult> suite_hyper(const SuiteConfig& cfg) {
  std::vector<PropertyResult> out;
  const std::vector<Hyper> h2 = all_hypers_on(small_web(2));
  const std::vector<Hyper> h3 = all_hypers_on(small_web(3));

  run_check(out, "negation is involutive", [&]() -> std::optional<std::string> {
    for (const Hyper& x : h2)
      if (!(hc_negation(hc_negation(x)) == x)) return "two tokens";
    for (const Hyper& x : h3)
      if (!(hc_negation(hc_negation(x)) == x)) return "three tokens";
    return std::nullopt;
  });

  run_check(out, "singletons survive every construction",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2)
                for (const Hyper& y : h2)
                  for (const Hyper& built :
                       {hc_negation(x), hc_tensor(x, y), hc_par(x, y), hc_before(x, y),
                        hc_lollipop(x, y)})
                    for (const Token& t : built.web()) {
                      if (!built.in_gamma({t})) return t.str();
                      if (built.in_gamma_star({t})) return t.str();
                    }
              return std::nullopt;
            });

  run_check(out, "tensor membership is projection membership",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2)
                for (const Hyper& y : h2) {
                  const Hyper t = hc_tensor(x, y);
                  for (const TokenSet& sub : all_subsets(t.web())) {
                    if (sub.empty()) continue;
                    std::vector<Token> w(sub.begin(), sub.end());
                    std::vector<Token> w1, w2;
                    for (const Token& p : w) {
                      w1.push_back(p.first());
                      w2.push_back(p.second());
                    }
                    const bool expect = x.in_gamma(w1) && y.in_gamma(w2);
                    if (t.in_gamma(w) != expect) return "membership mismatch";
                  }
                }
              return std::nullopt;
            });

  run_check(out, "linear maps equal negated tensor against negation",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2)
                for (const Hyper& y : h2)
                  if (!(hc_lollipop(x, y) ==
                        hc_negation(hc_tensor(x, hc_negation(y)))))
                    return "mismatch";
              return std::nullopt;
            });

  run_check(out, "strict inputs need strict outputs",
            [&]() -> std::optional<std::string> {
              const std::vector<Token> xy = small_web(2);
              const Hyper x(xy, {{xy[0], xy[1]}});
              const Hyper y(xy, {});
              const Hyper map = hc_lollipop(x, y);
              // both inputs strictly coherent, outputs collapse to one token
              const std::vector<Token> w = {Token::pair(xy[0], xy[0]),
                                            Token::pair(xy[1], xy[0])};
              if (map.in_gamma(w)) return "collapsing map admitted";
              return std::nullopt;
            });

  run_check(out, "before is self-dual and sits in the sandwich",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2)
                for (const Hyper& y : h2) {
                  if (!(hc_negation(hc_before(x, y)) ==
                        hc_before(hc_negation(x), hc_negation(y))))
                    return "self-duality fails";
                  const Hyper t = hc_tensor(x, y);
                  const Hyper bf = hc_before(x, y);
                  const Hyper p = hc_par(x, y);
                  for (const auto& w : t.gamma_star())
                    if (!bf.in_gamma_star(w)) return "tensor escapes before";
                  for (const auto& w : bf.gamma_star())
                    if (!p.in_gamma_star(w)) return "before escapes par";
                }
              return std::nullopt;
            });

  run_check(out, "before associates through re-pairing",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2)
                for (const Hyper& y : h2)
                  for (const Hyper& z : h2) {
                    const Hyper l = hc_before(hc_before(x, y), z);
                    const Hyper r = hc_before(x, hc_before(y, z));
                    for (const auto& w : l.gamma_star()) {
                      std::vector<Token> repaired;
                      for (const Token& t : w)
                        repaired.push_back(Token::pair(
                            t.first().first(), Token::pair(t.first().second(), t.second())));
                      if (!r.in_gamma_star(repaired)) return "left-to-right fails";
                    }
                    for (const auto& w : r.gamma_star()) {
                      std::vector<Token> repaired;
                      for (const Token& t : w)
                        repaired.push_back(Token::pair(
                            Token::pair(t.first(), t.second().first()), t.second().second()));
                      if (!l.in_gamma_star(repaired)) return "right-to-left fails";
                    }
                  }
              return std::nullopt;
            });

  const std::vector<Token> xy = small_web(2);
  const std::vector<Tree> trees = all_normal_trees(xy, cfg.tree_depth);

  auto families = [&](auto&& fn) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << trees.size()); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<Tree> family;
      for (std::size_t i = 0; i < trees.size(); ++i)
        if (mask & (std::size_t{1} << i)) family.push_back(trees[i]);
      if (!fn(family)) return false;
    }
    return true;
  };

  run_check(out, "flag on hypercoherences rejects singleton families",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2) {
                for (const Token& t : x.web()) {
                  const Tree constant[] = {Tree::leaf(t)};
                  if (hflag_gamma_star(x, constant)) return t.str();
                }
                const Tree twice[] = {Tree::leaf(x.web()[0]),
                                      normalize(Tree::node(Tree::leaf(x.web()[0]),
                                                           Tree::leaf(x.web()[0])))};
                if (hflag_gamma_star(x, twice)) return "duplicate constants admitted";
              }
              return std::nullopt;
            });

  run_check(out, "flag on hypercoherences is self-dual",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2) {
                const Hyper nx = hc_negation(x);
                const bool ok = families([&](const std::vector<Tree>& family) {
                  return hflag_gamma_star(x, family) != hflag_gamma_star(nx, family);
                });
                if (!ok) return "family in both or neither";
              }
              return std::nullopt;
            });

  run_check(out, "flag on hypercoherences contracts through before",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2) {
                const bool ok = families([&](const std::vector<Tree>& family) {
                  std::vector<Tree> firsts, seconds;
                  for (const Tree& h : family) {
                    const auto [h0, h1] = split(h);
                    firsts.push_back(h0);
                    seconds.push_back(h1);
                  }
                  std::sort(firsts.begin(), firsts.end());
                  firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
                  const bool lhs = hflag_gamma_star(x, family);
                  const bool rhs = hflag_gamma_star(x, firsts) ||
                                   (firsts.size() == 1 && hflag_gamma_star(x, seconds));
                  return lhs == rhs;
                });
                if (!ok) return "contraction mismatch";
              }
              return std::nullopt;
            });

  run_check(out, "constants embed the hypercoherence",
            [&]() -> std::optional<std::string> {
              for (const Hyper& x : h2)
                for (const TokenSet& sub : all_subsets(x.web())) {
                  if (sub.size() < 2) continue;
                  std::vector<Tree> constants;
                  for (const Token& t : sub) constants.push_back(Tree::leaf(t));
                  const std::vector<Token> w(sub.begin(), sub.end());
                  if (hflag_gamma_star(x, constants) != x.in_gamma_star(w))
                    return "embedding changes strict coherence";
                }
              return std::nullopt;
            });

  return out;
}

// ------------------------------------------------------------------ nets --

struct NamedStructure {
  std::string name;
  ProofStructure ps;
};

std::vector<NamedStructure> figure_structures() {
  std::vector<NamedStructure> out;
  out.push_back({"crossing tensors under before",
                 ProofStructure{parse_formula("((a*~c)|(~a*c));(b|~b)"),
                                {{0, 2}, {1, 3}, {4, 5}},
                                {}}});
  out.push_back({"crossing befores under before",
                 ProofStructure{parse_formula("((a;~c)|(c;~a));(b|~b)"),
                                {{0, 3}, {1, 2}, {4, 5}},
                                {}}});
  out.push_back({"tensor of axiom pars under before",
                 ProofStructure{parse_formula("((a|~a)*(~c|c));(b|~b)"),
                                {{0, 1}, {2, 3}, {4, 5}},
                                {}}});
  out.push_back({"parallel befores under before",
                 ProofStructure{parse_formula("((a;~c)|(~a;c));(b|~b)"),
                                {{0, 2}, {1, 3}, {4, 5}},
                                {}}});
  return out;
}

std::vector<std::string> matching_family_formulas() {
  return {
      "a|~a",
      "a*~a",
      "a;~a",
      "(a|~a)|(a|~a)",
      "(a*b)|(~a*~b)",
      "(a*b)|(~b*~a)",
      "((a|~a)*b)|~b",
      "(a;b)|(~b;~a)",
      "(a;b)|(~a;~b)",
      "(a|~a);(b|~b)",
      "((a*~c)|(~a*c));(b|~b)",
      "((a|~a)*(~c|c));(b|~b)",
  };
}

std::vector<std::pair<std::string, Space>> selected_catalog(const SuiteConfig& cfg) {
  const auto full = default_catalog();
  if (cfg.catalog.empty()) return full;
  std::vector<std::pair<std::string, Space>> picked;
  for (const std::string& name : cfg.catalog) {
    bool found = false;
    for (const auto& entry : full)
      if (entry.first == name) {
        picked.push_back(entry);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown catalog space: " + name);
  }
  return picked;
}

std::vector<PropertyResult> suite_nets(const SuiteConfig& cfg) {
  std::vector<PropertyResult> out;
  const std::vector<NamedStructure> figures = figure_structures();
  const auto catalog = selected_catalog(cfg);
  const auto full_catalog = default_catalog();

  run_check(out, "worked structures get their verdicts",
            [&]() -> std::optional<std::string> {
              const bool expect_correct[] = {false, false, true, true};
              for (std::size_t i = 0; i < figures.size(); ++i) {
                const Verdict v = check_correctness(figures[i].ps, cfg.circuit_cap);
                if (v.correct != expect_correct[i]) return figures[i].name;
                if (!v.correct &&
                    v.circuit_display(figures[i].ps) != "a, ~c, c, ~a, a")
                  return figures[i].name + ": " + v.circuit_display(figures[i].ps);
              }
              return std::nullopt;
            });

  run_check(out, "axioms inside tensor or before close bad circuits",
            [&]() -> std::optional<std::string> {
              const struct {
                const char* text;
                bool correct;
              } cases[] = {{"a|~a", true}, {"a*~a", false}, {"a;~a", false}};
              for (const auto& c : cases) {
                const ProofStructure ps{parse_formula(c.text), {{0, 1}}, {}};
                if (check_correctness(ps, cfg.circuit_cap).correct != c.correct)
                  return c.text;
              }
              return std::nullopt;
            });

  run_check(out, "dicographs are stable under AC rewrites",
            [&]() -> std::optional<std::string> {
              std::mt19937 seeds(cfg.seed + 2);
              for (const NamedStructure& fig : figures)
                for (int round = 0; round < 16; ++round) {
                  const RewrittenFormula rw =
                      random_ac_rewrite(fig.ps.conclusion, 12, seeds());
                  if (!(relabel(dicograph_of(fig.ps.conclusion), rw.perm) ==
                        dicograph_of(rw.formula)))
                    return fig.name;
                }
              return std::nullopt;
            });

  run_check(out, "experiment counts are stable under AC rewrites",
            [&]() -> std::optional<std::string> {
              std::mt19937 seeds(cfg.seed + 3);
              for (const NamedStructure& fig : figures) {
                Interpretation interp;
                for (const AtomOcc& occ : atom_occurrences(fig.ps.conclusion))
                  interp.emplace(occ.var, full_catalog[1].second);  // two coherent tokens
                const std::size_t count =
                    experiment_results(fig.ps, interp).size();
                for (int round = 0; round < 8; ++round) {
                  const RewrittenFormula rw =
                      random_ac_rewrite(fig.ps.conclusion, 12, seeds());
                  ProofStructure moved{rw.formula, {}, {}};
                  for (const auto& [i, j] : fig.ps.axioms)
                    moved.axioms.emplace_back(
                        rw.perm[static_cast<std::size_t>(i)],
                        rw.perm[static_cast<std::size_t>(j)]);
                  if (experiment_results(moved, interp).size() != count)
                    return fig.name;
                }
              }
              return std::nullopt;
            });

  run_check(out, "experiments are bounded by token choices",
            [&]() -> std::optional<std::string> {
              for (const NamedStructure& fig : figures) {
                Interpretation interp;
                for (const AtomOcc& occ : atom_occurrences(fig.ps.conclusion))
                  interp.emplace(occ.var, full_catalog[3].second);  // three tokens
                std::size_t bound = 1;
                for (std::size_t k = 0; k < fig.ps.axioms.size(); ++k) bound *= 3;
                if (experiment_results(fig.ps, interp).size() > bound)
                  return fig.name;
              }
              return std::nullopt;
            });

  run_check(out, "interpretations separate exactly the incorrect structures",
            [&]() -> std::optional<std::string> {
              for (const std::string& text : matching_family_formulas()) {
                const Formula f = parse_formula(text);
                for (const auto& matching : all_axiom_matchings(f)) {
                  const ProofStructure ps{f, matching, {}};
                  if (!semantic_correctness_check(ps, catalog).consistent())
                    return text;
                }
              }
              return std::nullopt;
            });

  run_check(out, "weakening connectives preserves correctness",
            [&]() -> std::optional<std::string> {
              for (const std::string& text : matching_family_formulas()) {
                const Formula f = parse_formula(text);
                for (const auto& matching : all_axiom_matchings(f)) {
                  const ProofStructure ps{f, matching, {}};
                  if (!check_correctness(ps, cfg.circuit_cap).correct) continue;
                  for (const Formula& weaker : single_weakenings(f)) {
                    const ProofStructure moved{weaker, matching, {}};
                    if (!check_correctness(moved, cfg.circuit_cap).correct)
                      return text + " weakened to " + weaker.str();
                  }
                }
              }
              return std::nullopt;
            });

  return out;
}

}  // namespace

Dicograph relabel(const Dicograph& d, const std::vector<int>& perm) {
  Dicograph out;
  out.vertex_count = d.vertex_count;
  for (const auto& [i, j] : d.arcs)
    out.arcs.emplace(perm[static_cast<std::size_t>(i)],
                     perm[static_cast<std::size_t>(j)]);
  for (const auto& [i, j] : d.edges) {
    const int a = perm[static_cast<std::size_t>(i)];
    const int b = perm[static_cast<std::size_t>(j)];
    out.edges.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

namespace {

Formula replace_at(const Formula& f, std::string_view path,
                   const std::function<Formula(const Formula&)>& op) {
  if (path.empty()) return op(f);
  if (path[0] == 'l')
    return Formula::binary(f.conn(), replace_at(f.left(), path.substr(1), op),
                           f.right());
  return Formula::binary(f.conn(), f.left(),
                         replace_at(f.right(), path.substr(1), op));
}

int atoms_before(const Formula& f, std::string_view path) {
  int base = 0;
  Formula cur = f;
  for (const char c : path) {
    if (c == 'r') base += cur.left().atom_count();
    cur = c == 'l' ? cur.left() : cur.right();
  }
  return base;
}

}  // namespace

RewrittenFormula random_ac_rewrite(const Formula& f, int steps, unsigned seed) {
  std::mt19937 rng(seed);
  RewrittenFormula rw{f, {}};
  rw.perm.resize(static_cast<std::size_t>(f.atom_count()));
  for (std::size_t i = 0; i < rw.perm.size(); ++i) rw.perm[i] = static_cast<int>(i);

  struct Candidate {
    std::string path;
    int kind;  // 0 commute, 1 rotate left, 2 rotate right
  };

  for (int step = 0; step < steps; ++step) {
    std::vector<Candidate> candidates;
    std::string path;
    std::function<void(const Formula&)> collect = [&](const Formula& g) {
      if (g.is_atom()) return;
      if (g.conn() != Conn::Before) candidates.push_back({path, 0});
      if (!g.right().is_atom() && g.right().conn() == g.conn())
        candidates.push_back({path, 1});
      if (!g.left().is_atom() && g.left().conn() == g.conn())
        candidates.push_back({path, 2});
      path.push_back('l');
      collect(g.left());
      path.back() = 'r';
      collect(g.right());
      path.pop_back();
    };
    collect(rw.formula);
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const Candidate& c = candidates[pick(rng)];

    if (c.kind == 0) {
      const auto node = subformula_at(rw.formula, c.path);
      const int base = atoms_before(rw.formula, c.path);
      const int nl = node->left().atom_count();
      const int nr = node->right().atom_count();
      std::vector<int> step_perm(rw.perm.size());
      for (std::size_t i = 0; i < step_perm.size(); ++i)
        step_perm[i] = static_cast<int>(i);
      for (int i = 0; i < nl; ++i) step_perm[static_cast<std::size_t>(base + i)] = base + nr + i;
      for (int j = 0; j < nr; ++j) step_perm[static_cast<std::size_t>(base + nl + j)] = base + j;
      for (int& x : rw.perm) x = step_perm[static_cast<std::size_t>(x)];
      rw.formula = replace_at(rw.formula, c.path, [](const Formula& g) {
        return Formula::binary(g.conn(), g.right(), g.left());
      });
    } else if (c.kind == 1) {
      // X c (Y c Z) -> (X c Y) c Z ; occurrences keep their order
      rw.formula = replace_at(rw.formula, c.path, [](const Formula& g) {
        return Formula::binary(
            g.conn(), Formula::binary(g.conn(), g.left(), g.right().left()),
            g.right().right());
      });
    } else {
      // (X c Y) c Z -> X c (Y c Z)
      rw.formula = replace_at(rw.formula, c.path, [](const Formula& g) {
        return Formula::binary(
            g.conn(), g.left().left(),
            Formula::binary(g.conn(), g.left().right(), g.right()));
      });
    }
  }
  return rw;
}

std::vector<Formula> single_weakenings(const Formula& f) {
  std::vector<Formula> out;
  std::string path;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.is_atom()) return;
    if (g.conn() == Conn::Tensor)
      out.push_back(replace_at(f, path, [](const Formula& h) {
        return Formula::binary(Conn::Before, h.left(), h.right());
      }));
    if (g.conn() == Conn::Before)
      out.push_back(replace_at(f, path, [](const Formula& h) {
        return Formula::binary(Conn::Par, h.left(), h.right());
      }));
    path.push_back('l');
    walk(g.left());
    path.back() = 'r';
    walk(g.right());
    path.pop_back();
  };
  walk(f);
  return out;
}

std::vector<PropertyResult> run_suite(std::string_view suite, const SuiteConfig& cfg) {
  cfg.validate();
  if (suite == "before") return suite_before(cfg);
  if (suite == "flag") return suite_flag(cfg);
  if (suite == "functor") return suite_functor(cfg);
  if (suite == "nomonad") return suite_nomonad(cfg);
  if (suite == "hyper") return suite_hyper(cfg);
  if (suite == "nets") return suite_nets(cfg);
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

}  // namespace pomcoh
