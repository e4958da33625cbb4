#include "pomcoh/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace pomcoh {

char conn_symbol(Conn c) {
  switch (c) {
    case Conn::Par: return '|';
    case Conn::Before: return ';';
    case Conn::Tensor: return '*';
  }
  return '?';
}

Formula Formula::atom(std::string_view var, bool positive) {
  if (var.empty()) throw std::invalid_argument("atom needs a variable name");
  auto rep = std::make_shared<Rep>();
  rep->var.assign(var);
  rep->positive = positive;
  return Formula(std::move(rep));
}

Formula Formula::binary(Conn c, const Formula& left, const Formula& right) {
  auto rep = std::make_shared<Rep>();
  rep->conn = c;
  rep->left = left.rep_;
  rep->right = right.rep_;
  rep->atoms = left.atom_count() + right.atom_count();
  return Formula(std::move(rep));
}

const std::string& Formula::var() const {
  if (!is_atom()) throw std::logic_error("var() on a compound formula");
  return rep_->var;
}

bool Formula::positive() const {
  if (!is_atom()) throw std::logic_error("positive() on a compound formula");
  return rep_->positive;
}

Conn Formula::conn() const {
  if (is_atom()) throw std::logic_error("conn() on an atom");
  return rep_->conn;
}

Formula Formula::left() const {
  if (is_atom()) throw std::logic_error("left() on an atom");
  return Formula(rep_->left);
}

Formula Formula::right() const {
  if (is_atom()) throw std::logic_error("right() on an atom");
  return Formula(rep_->right);
}

std::string Formula::str() const {
  if (is_atom()) return (positive() ? "" : "~") + var();
  auto wrap = [](const Formula& f) {
    return f.is_atom() ? f.str() : "(" + f.str() + ")";
  };
  return wrap(left()) + conn_symbol(conn()) + wrap(right());
}

int Formula::compare(const Formula& a, const Formula& b) {
  struct Walk {
    static int go(const Rep* x, const Rep* y) {
      if (x == y) return 0;
      const bool xa = x->left == nullptr;
      const bool ya = y->left == nullptr;
      if (xa != ya) return xa ? -1 : 1;
      if (xa) {
        if (const int c = x->var.compare(y->var)) return c < 0 ? -1 : 1;
        if (x->positive != y->positive) return x->positive ? -1 : 1;
        return 0;
      }
      if (x->conn != y->conn) return x->conn < y->conn ? -1 : 1;
      if (const int c = go(x->left.get(), y->left.get())) return c;
      return go(x->right.get(), y->right.get());
    }
  };
  return Walk::go(a.rep_.get(), b.rep_.get());
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  bool at_conn() {
    if (pos >= text.size()) return false;
    const char c = text[pos];
    return c == '*' || c == '|' || c == ';';
  }

  Conn read_conn() {
    switch (text[pos++]) {
      case '*': return Conn::Tensor;
      case '|': return Conn::Par;
      default: return Conn::Before;
    }
  }

  std::string read_ident() {
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an atom name");
    return std::string(text.substr(start, pos - start));
  }

  Formula parse_operand() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of formula");
    if (text[pos] == '(') {
      ++pos;
      Formula f = parse_expr();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return f;
    }
    if (text[pos] == '~') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '(')
        fail("negation applies to atoms only (formulas are in negation normal form)");
      return Formula::atom(read_ident(), false);
    }
    std::string name = read_ident();
    if (pos < text.size() && text[pos] == '\'') {
      ++pos;
      return Formula::atom(name, false);
    }
    return Formula::atom(name, true);
  }

  Formula parse_expr() {
    Formula acc = parse_operand();
    std::optional<Conn> chain;
    for (;;) {
      skip_ws();
      if (!at_conn()) break;
      const std::size_t at = pos;
      const Conn c = read_conn();
      if (chain && *chain != c)
        throw ParseError("mixed connectives need parentheses", at);
      chain = c;
      acc = Formula::binary(c, acc, parse_operand());
    }
    return acc;
  }
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p{text};
  Formula f = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after formula");
  return f;
}

Formula dual(const Formula& f) {
  if (f.is_atom()) return Formula::atom(f.var(), !f.positive());
  switch (f.conn()) {
    case Conn::Par: return Formula::binary(Conn::Tensor, dual(f.left()), dual(f.right()));
    case Conn::Tensor: return Formula::binary(Conn::Par, dual(f.left()), dual(f.right()));
    case Conn::Before:
      return Formula::binary(Conn::Before, dual(f.left()), dual(f.right()));
  }
  return f;
}

std::vector<AtomOcc> atom_occurrences(const Formula& f) {
  std::vector<AtomOcc> out;
  std::string path;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.is_atom()) {
      out.push_back(AtomOcc{static_cast<int>(out.size()), g.var(), g.positive(), path});
      return;
    }
    path.push_back('l');
    walk(g.left());
    path.back() = 'r';
    walk(g.right());
    path.pop_back();
  };
  walk(f);
  return out;
}

std::optional<Formula> subformula_at(const Formula& f, std::string_view path) {
  Formula cur = f;
  for (const char c : path) {
    if (cur.is_atom()) return std::nullopt;
    if (c == 'l')
      cur = cur.left();
    else if (c == 'r')
      cur = cur.right();
    else
      return std::nullopt;
  }
  return cur;
}

Dicograph dicograph_of(const Formula& f) {
  Dicograph d;
  d.vertex_count = f.atom_count();
  // DFS ranges: the occurrences below a node form a contiguous interval.
  std::function<std::pair<int, int>(const Formula&, int)> walk =
      [&](const Formula& g, int base) -> std::pair<int, int> {
    if (g.is_atom()) return {base, base + 1};
    const auto [llo, lhi] = walk(g.left(), base);
    const auto [rlo, rhi] = walk(g.right(), lhi);
    for (int i = llo; i < lhi; ++i)
      for (int j = rlo; j < rhi; ++j) {
        if (g.conn() == Conn::Tensor) d.edges.emplace(i, j);
        if (g.conn() == Conn::Before) d.arcs.emplace(i, j);
      }
    return {llo, rhi};
  };
  walk(f, 0);
  return d;
}

std::string dicograph_dot(const Formula& f) {
  const std::vector<AtomOcc> occs = atom_occurrences(f);
  const Dicograph d = dicograph_of(f);

  // Canonical vertex order: by display label, ties by occurrence index.
  std::vector<int> order(occs.size());
  for (std::size_t i = 0; i < occs.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return occs[static_cast<std::size_t>(a)].display() <
           occs[static_cast<std::size_t>(b)].display();
  });
  std::vector<int> rank(occs.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

  std::ostringstream out;
  out << "digraph dicograph {\n";
  for (std::size_t k = 0; k < order.size(); ++k)
    out << "  n" << k << " [label=\""
        << occs[static_cast<std::size_t>(order[k])].display() << "\"];\n";

  std::vector<std::pair<int, int>> arcs, edges;
  for (const auto& [i, j] : d.arcs)
    arcs.emplace_back(rank[static_cast<std::size_t>(i)],
                      rank[static_cast<std::size_t>(j)]);
  for (const auto& [i, j] : d.edges) {
    int a = rank[static_cast<std::size_t>(i)];
    int b = rank[static_cast<std::size_t>(j)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(arcs.begin(), arcs.end());
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : arcs) out << "  n" << a << " -> n" << b << ";\n";
  for (const auto& [a, b] : edges)
    out << "  n" << a << " -> n" << b << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace pomcoh
