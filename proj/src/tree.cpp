#include "pomcoh/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pomcoh {

bool word_less(const BitWord& a, const BitWord& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const char ca = i < a.size() ? a[i] : '0';
    const char cb = i < b.size() ? b[i] : '0';
    if (ca != cb) return ca < cb;
  }
  return false;
}

bool word_equal(const BitWord& a, const BitWord& b) {
  return !word_less(a, b) && !word_less(b, a);
}

Tree Tree::leaf(const Token& t) {
  auto rep = std::make_shared<Rep>();
  rep->token = t;
  return Tree(std::move(rep));
}

Tree Tree::node(const Tree& left, const Tree& right) {
  auto rep = std::make_shared<Rep>();
  rep->left = left.rep_;
  rep->right = right.rep_;
  rep->depth = 1 + std::max(left.depth(), right.depth());
  rep->leaves = left.leaf_count() + right.leaf_count();
  return Tree(std::move(rep));
}

const Token& Tree::token() const {
  if (!is_leaf()) throw std::logic_error("token() on an inner node");
  return *rep_->token;
}

Tree Tree::left() const {
  if (is_leaf()) throw std::logic_error("left() on a leaf");
  return Tree(rep_->left);
}

Tree Tree::right() const {
  if (is_leaf()) throw std::logic_error("right() on a leaf");
  return Tree(rep_->right);
}

std::string Tree::str() const {
  if (is_leaf()) return token().str();
  return "<" + left().str() + " " + right().str() + ">";
}

// Shared raw-pointer walks over tree pairs; the pointer-equality cut-off
// makes exhaustive pair scans over enumerated (shared) trees cheap.
struct TreeWalk {
  using Rep = Tree::Rep;

  static const Rep* raw(const Tree& t) { return t.rep_.get(); }
  static Tree wrap(const Tree& t) { return t; }

  static const Rep* child0(const Rep* r) {
    return r->left == nullptr ? r : r->left.get();
  }
  static const Rep* child1(const Rep* r) {
    return r->left == nullptr ? r : r->right.get();
  }
  static bool leaf(const Rep* r) { return r->left == nullptr; }

  static int cmp(const Rep* a, const Rep* b) {
    if (a == b) return 0;
    const bool la = leaf(a), lb = leaf(b);
    if (la != lb) return la ? -1 : 1;
    if (la) {
      if (*a->token == *b->token) return 0;
      return *a->token < *b->token ? -1 : 1;
    }
    if (const int c = cmp(a->left.get(), b->left.get())) return c;
    return cmp(a->right.get(), b->right.get());
  }

  static bool diff(const Rep* f, const Rep* g, BitWord& path,
                   const Token** fv, const Token** gv) {
    if (f == g) return false;
    if (leaf(f) && leaf(g)) {
      if (*f->token == *g->token) return false;
      *fv = &*f->token;
      *gv = &*g->token;
      return true;
    }
    path.push_back('0');
    if (diff(child0(f), child0(g), path, fv, gv)) return true;
    path.back() = '1';
    if (diff(child1(f), child1(g), path, fv, gv)) return true;
    path.pop_back();
    return false;
  }

  static void superpose(const Rep* f, const Rep* g, BitWord& path,
                        std::vector<RefLeaf>& out) {
    if (leaf(f) && leaf(g)) {
      out.push_back(RefLeaf{path, *f->token, *g->token});
      return;
    }
    path.push_back('0');
    superpose(child0(f), child0(g), path, out);
    path.back() = '1';
    superpose(child1(f), child1(g), path, out);
    path.pop_back();
  }

  static void multi_superpose(std::vector<const Rep*>& nodes, BitWord& path,
                              std::vector<MultiRefLeaf>& out) {
    bool all_leaves = true;
    for (const Rep* r : nodes) all_leaves = all_leaves && leaf(r);
    if (all_leaves) {
      MultiRefLeaf l;
      l.word = path;
      l.values.reserve(nodes.size());
      for (const Rep* r : nodes) l.values.push_back(*r->token);
      out.push_back(std::move(l));
      return;
    }
    std::vector<const Rep*> kids(nodes.size());
    path.push_back('0');
    for (std::size_t i = 0; i < nodes.size(); ++i) kids[i] = child0(nodes[i]);
    multi_superpose(kids, path, out);
    path.back() = '1';
    for (std::size_t i = 0; i < nodes.size(); ++i) kids[i] = child1(nodes[i]);
    multi_superpose(kids, path, out);
    path.pop_back();
  }
};

int Tree::compare(const Tree& a, const Tree& b) {
  return TreeWalk::cmp(a.rep_.get(), b.rep_.get());
}

Tree normalize(const Tree& t) {
  if (t.is_leaf()) return t;
  const Tree l = normalize(t.left());
  const Tree r = normalize(t.right());
  if (l.is_leaf() && r.is_leaf() && l.token() == r.token()) return l;
  if (l == t.left() && r == t.right()) return t;
  return Tree::node(l, r);
}

bool is_normal(const Tree& t) {
  if (t.is_leaf()) return true;
  if (t.left().is_leaf() && t.right().is_leaf() &&
      t.left().token() == t.right().token())
    return false;
  return is_normal(t.left()) && is_normal(t.right());
}

std::vector<BitWord> redex_paths(const Tree& t) {
  std::vector<BitWord> out;
  BitWord path;
  struct {
    std::vector<BitWord>* out;
    void walk(const Tree& t, BitWord& path) {
      if (t.is_leaf()) return;
      if (t.left().is_leaf() && t.right().is_leaf() &&
          t.left().token() == t.right().token())
        out->push_back(path);
      path.push_back('0');
      walk(t.left(), path);
      path.back() = '1';
      walk(t.right(), path);
      path.pop_back();
    }
  } rec{&out};
  rec.walk(t, path);
  return out;
}

Tree contract_redex(const Tree& t, const BitWord& path) {
  if (path.empty()) {
    if (t.is_leaf() || !t.left().is_leaf() || !t.right().is_leaf() ||
        !(t.left().token() == t.right().token()))
      throw std::invalid_argument("no redex at the given address");
    return t.left();
  }
  if (t.is_leaf()) throw std::invalid_argument("redex address leaves the tree");
  const BitWord rest = path.substr(1);
  if (path[0] == '0') return Tree::node(contract_redex(t.left(), rest), t.right());
  return Tree::node(t.left(), contract_redex(t.right(), rest));
}

Token eval(const Tree& t, const BitWord& m) {
  Tree cur = t;
  std::size_t i = 0;
  while (!cur.is_leaf()) {
    const char bit = i < m.size() ? m[i] : '0';
    cur = bit == '0' ? cur.left() : cur.right();
    ++i;
  }
  return cur.token();
}

std::vector<PrefixPair> to_pairs(const Tree& t) {
  std::vector<PrefixPair> out;
  BitWord path;
  struct {
    std::vector<PrefixPair>* out;
    void walk(const Tree& t, BitWord& path) {
      if (t.is_leaf()) {
        out->push_back(PrefixPair{path, t.token()});
        return;
      }
      path.push_back('0');
      walk(t.left(), path);
      path.back() = '1';
      walk(t.right(), path);
      path.pop_back();
    }
  } rec{&out};
  rec.walk(t, path);
  return out;
}

namespace {

Tree build_from_cover(std::vector<PrefixPair>& entries) {
  if (entries.empty())
    throw std::invalid_argument("prefix cover leaves a branch uncovered");
  bool has_root = false;
  for (const auto& e : entries) has_root = has_root || e.word.empty();
  if (has_root) {
    if (entries.size() > 1)
      throw std::invalid_argument("prefix cover words overlap");
    return Tree::leaf(entries[0].value);
  }
  std::vector<PrefixPair> zeros, ones;
  for (auto& e : entries) {
    PrefixPair rest{e.word.substr(1), e.value};
    (e.word[0] == '0' ? zeros : ones).push_back(std::move(rest));
  }
  const Tree l = build_from_cover(zeros);
  const Tree r = build_from_cover(ones);
  if (l.is_leaf() && r.is_leaf() && l.token() == r.token()) return l;
  return Tree::node(l, r);
}

}  // namespace

Tree from_pairs(const std::vector<PrefixPair>& cover) {
  // Exact duplicates collapse to one entry; duplicate words with distinct
  // tokens surface as overlaps below.
  std::vector<PrefixPair> entries;
  for (const auto& e : cover) {
    for (const char c : e.word)
      if (c != '0' && c != '1')
        throw std::invalid_argument("prefix cover word must be over {0,1}");
    bool dup = false;
    for (const auto& kept : entries)
      dup = dup || (kept.word == e.word && kept.value == e.value);
    if (!dup) entries.push_back(e);
  }
  return build_from_cover(entries);
}

std::vector<RefLeaf> common_refinement(const Tree& f, const Tree& g) {
  std::vector<RefLeaf> out;
  BitWord path;
  TreeWalk::superpose(TreeWalk::raw(f), TreeWalk::raw(g), path, out);
  return out;
}

std::vector<MultiRefLeaf> common_refinement(std::span<const Tree> trees) {
  if (trees.empty()) return {};
  std::vector<MultiRefLeaf> out;
  std::vector<const TreeWalk::Rep*> nodes;
  nodes.reserve(trees.size());
  for (const Tree& t : trees) nodes.push_back(TreeWalk::raw(t));
  BitWord path;
  TreeWalk::multi_superpose(nodes, path, out);
  return out;
}

std::optional<BitWord> first_difference(const Tree& f, const Tree& g) {
  BitWord path;
  const Token *fv = nullptr, *gv = nullptr;
  if (!TreeWalk::diff(TreeWalk::raw(f), TreeWalk::raw(g), path, &fv, &gv))
    return std::nullopt;
  return path;
}

std::optional<std::tuple<BitWord, Token, Token>> first_difference_values(
    const Tree& f, const Tree& g) {
  BitWord path;
  const Token *fv = nullptr, *gv = nullptr;
  if (!TreeWalk::diff(TreeWalk::raw(f), TreeWalk::raw(g), path, &fv, &gv))
    return std::nullopt;
  return std::tuple(path, *fv, *gv);
}

namespace {

Tree parse_tree_at(std::string_view text, std::size_t& pos) {
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw std::invalid_argument("tree syntax: unexpected end");
  if (text[pos] == '<') {
    ++pos;
    const Tree l = parse_tree_at(text, pos);
    const Tree r = parse_tree_at(text, pos);
    skip_ws();
    if (pos >= text.size() || text[pos] != '>')
      throw std::invalid_argument("tree syntax: expected '>'");
    ++pos;
    return Tree::node(l, r);
  }
  const std::size_t start = pos;
  while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                               text[pos] == '_' || text[pos] == '*'))
    ++pos;
  if (pos == start) throw std::invalid_argument("tree syntax: expected a token name");
  return Tree::leaf(Token::atom(text.substr(start, pos - start)));
}

}  // namespace

Tree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  const Tree t = parse_tree_at(text, pos);
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos != text.size())
    throw std::invalid_argument("tree syntax: trailing input");
  return t;
}

std::string format_prefix_cover(const std::vector<PrefixPair>& cover) {
  std::string out;
  for (const PrefixPair& p : cover) {
    out += p.word.empty() ? "." : p.word;
    out += ' ';
    out += p.value.str();
    out += '\n';
  }
  return out;
}

std::vector<PrefixPair> parse_prefix_cover(std::string_view text) {
  std::vector<PrefixPair> cover;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    const auto space = line.find_first_of(" \t", first);
    if (space == std::string_view::npos)
      throw std::invalid_argument("prefix cover line needs a word and a token");
    const auto tok_at = line.find_first_not_of(" \t", space);
    if (tok_at == std::string_view::npos)
      throw std::invalid_argument("prefix cover line needs a word and a token");
    const auto tok_end = line.find_first_of(" \t", tok_at);
    std::string_view word = line.substr(first, space - first);
    if (word == ".") word = "";
    const std::string_view rest = line.substr(
        tok_at, tok_end == std::string_view::npos ? line.size() - tok_at
                                                  : tok_end - tok_at);
    if (tok_end != std::string_view::npos &&
        line.find_first_not_of(" \t", tok_end) != std::string_view::npos)
      throw std::invalid_argument("prefix cover line has trailing input");
    cover.push_back(PrefixPair{BitWord(word), Token::atom(rest)});
  }
  return cover;
}

std::vector<Tree> all_normal_trees(std::span<const Token> alphabet, int max_depth) {
  std::vector<Tree> level;
  level.reserve(alphabet.size());
  for (const Token& t : alphabet) level.push_back(Tree::leaf(t));
  std::vector<Tree> all = level;
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Tree> next;
    for (const Tree& l : all)
      for (const Tree& r : all) {
        if (std::max(l.depth(), r.depth()) != d - 1) continue;  // new depth only
        if (l.is_leaf() && r.is_leaf() && l.token() == r.token()) continue;
        next.push_back(Tree::node(l, r));
      }
    all.insert(all.end(), next.begin(), next.end());
  }
  return all;
}

Tree random_tree(std::span<const Token> alphabet, int max_depth, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  if (max_depth == 0 || coin(rng) == 0) return Tree::leaf(alphabet[pick(rng)]);
  return Tree::node(random_tree(alphabet, max_depth - 1, rng),
                    random_tree(alphabet, max_depth - 1, rng));
}

}  // namespace pomcoh
