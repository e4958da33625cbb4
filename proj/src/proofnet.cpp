#include "pomcoh/proofnet.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pomcoh {

void validate_structure(const ProofStructure& ps) {
  const std::vector<AtomOcc> occs = atom_occurrences(ps.conclusion);
  const int n = static_cast<int>(occs.size());

  std::vector<int> partner(occs.size(), -1);
  for (const auto& [i, j] : ps.axioms) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw std::invalid_argument("axiom link out of range");
    if (partner[static_cast<std::size_t>(i)] != -1 ||
        partner[static_cast<std::size_t>(j)] != -1)
      throw std::invalid_argument("occurrence used by two axiom links");
    const AtomOcc& a = occs[static_cast<std::size_t>(i)];
    const AtomOcc& b = occs[static_cast<std::size_t>(j)];
    if (a.var != b.var || a.positive == b.positive)
      throw std::invalid_argument("axiom link must join dual occurrences of one variable");
    partner[static_cast<std::size_t>(i)] = j;
    partner[static_cast<std::size_t>(j)] = i;
  }
  for (int i = 0; i < n; ++i)
    if (partner[static_cast<std::size_t>(i)] == -1)
      throw std::invalid_argument("occurrence " + std::to_string(i) +
                                  " (" + occs[static_cast<std::size_t>(i)].display() +
                                  ") has no axiom link");

  int atoms_in_cuts = 0;
  for (const std::string& path : ps.cuts) {
    for (const char c : path)
      if (c != 'l' && c != 'r')
        throw std::invalid_argument("cut path must be a word over l/r");
    const auto sub = subformula_at(ps.conclusion, path);
    if (!sub) throw std::invalid_argument("cut path leaves the formula");
    if (sub->is_atom() || sub->conn() != Conn::Tensor)
      throw std::invalid_argument("cut must address a tensor node");
    if (!(dual(sub->left()) == sub->right()))
      throw std::invalid_argument("cut children must be dual formulas");
    atoms_in_cuts += sub->atom_count();
  }
  for (std::size_t i = 0; i < ps.cuts.size(); ++i)
    for (std::size_t j = 0; j < ps.cuts.size(); ++j) {
      if (i == j) continue;
      if (ps.cuts[j].starts_with(ps.cuts[i]))
        throw std::invalid_argument("cut paths must not overlap");
    }
  if (!ps.cuts.empty() && atoms_in_cuts >= n)
    throw std::invalid_argument("structure must keep a conclusion besides its cuts");
}

ProofStructure parse_structure_text(std::string_view text) {
  std::optional<Formula> formula;
  std::vector<std::pair<int, int>> axioms;
  std::vector<std::string> cuts;

  std::size_t line_start = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t here = line_start;
    line_start += line.size() + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!formula) {
      // The first significant line is the conclusion formula.
      std::string rest = line;
      const auto first = rest.find_first_not_of(" \t");
      formula = parse_formula(rest.substr(first));
      continue;
    }
    if (word == "link") {
      int i = -1, j = -1;
      if (!(ls >> i >> j))
        throw ParseError("link needs two occurrence indices", here);
      axioms.emplace_back(i, j);
    } else if (word == "cut") {
      std::string path;
      if (!(ls >> path)) throw ParseError("cut needs an l/r path", here);
      cuts.push_back(path);
    } else {
      throw ParseError("unknown directive '" + word + "'", here);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing input on line", here);
  }
  if (!formula) throw ParseError("structure file has no formula line", 0);
  ProofStructure ps{*formula, std::move(axioms), std::move(cuts)};
  validate_structure(ps);
  return ps;
}

std::string Verdict::circuit_display(const ProofStructure& ps) const {
  const std::vector<AtomOcc> occs = atom_occurrences(ps.conclusion);
  std::string out;
  for (const int v : circuit) {
    out += occs[static_cast<std::size_t>(v)].display();
    out += ", ";
  }
  if (!circuit.empty()) out += occs[static_cast<std::size_t>(circuit[0])].display();
  return out;
}

Verdict check_correctness(const ProofStructure& ps, std::size_t vertex_cap) {
  validate_structure(ps);
  const std::size_t n = static_cast<std::size_t>(ps.conclusion.atom_count());
  if (n > vertex_cap)
    throw std::length_error("structure exceeds the circuit enumeration cap");

  const Dicograph d = dicograph_of(ps.conclusion);
  std::vector<std::vector<int>> out(n);
  std::set<std::pair<int, int>> radj;
  for (const auto& [i, j] : d.arcs) {
    out[static_cast<std::size_t>(i)].push_back(j);
    radj.emplace(i, j);
  }
  for (const auto& [i, j] : d.edges) {
    out[static_cast<std::size_t>(i)].push_back(j);
    out[static_cast<std::size_t>(j)].push_back(i);
    radj.emplace(i, j);
    radj.emplace(j, i);
  }
  for (auto& v : out) std::sort(v.begin(), v.end());

  std::vector<int> partner(n, -1);
  for (const auto& [i, j] : ps.axioms) {
    partner[static_cast<std::size_t>(i)] = j;
    partner[static_cast<std::size_t>(j)] = i;
  }

  // seq lists the circuit's vertices in traversal order; with r_first the
  // R steps sit at even positions, otherwise at odd ones. A chord is an R
  // adjacency between circuit vertices that no circuit step uses (an edge
  // traversed one way counts as used both ways).
  auto chordless = [&](const std::vector<int>& seq, bool r_first) {
    std::set<std::pair<int, int>> used;
    const std::size_t m = seq.size();
    for (std::size_t k = r_first ? 0 : 1; k < m; k += 2) {
      const int u = seq[k];
      const int w = seq[(k + 1) % m];
      used.emplace(u, w);
      if (d.edges.count({std::min(u, w), std::max(u, w)})) used.emplace(w, u);
    }
    for (const int x : seq)
      for (const int y : seq)
        if (x != y && radj.count({x, y}) && !used.count({x, y})) return false;
    return true;
  };

  std::vector<bool> visited(n, false);
  std::vector<int> seq;
  std::optional<std::vector<int>> witness;

  // Walks every elementary alternating circuit, started at its minimal
  // vertex; B edges follow the matching, R steps follow arcs forward and
  // edges both ways.
  std::function<void(int, int, bool)> walk = [&](int v0, int u, bool r_first) {
    if (witness) return;
    for (const int w : out[static_cast<std::size_t>(u)]) {
      if (witness) return;
      const int pw = partner[static_cast<std::size_t>(w)];
      if (r_first) {
        if (w == partner[static_cast<std::size_t>(v0)] && !visited[static_cast<std::size_t>(w)]) {
          seq.push_back(w);
          if (chordless(seq, true)) witness = seq;
          seq.pop_back();
          continue;
        }
      } else if (w == v0) {
        if (chordless(seq, false)) witness = seq;
        continue;
      }
      if (visited[static_cast<std::size_t>(w)] ||
          visited[static_cast<std::size_t>(pw)] || w <= v0 || pw <= v0)
        continue;
      visited[static_cast<std::size_t>(w)] = visited[static_cast<std::size_t>(pw)] = true;
      seq.push_back(w);
      seq.push_back(pw);
      walk(v0, pw, r_first);
      seq.pop_back();
      seq.pop_back();
      visited[static_cast<std::size_t>(w)] = visited[static_cast<std::size_t>(pw)] = false;
    }
  };

  for (std::size_t v0 = 0; v0 < n && !witness; ++v0) {
    const int p0 = partner[v0];
    visited[v0] = true;
    seq = {static_cast<int>(v0)};
    // The start vertex leaves via R; its own axiom closes the circuit.
    walk(static_cast<int>(v0), static_cast<int>(v0), true);
    // Or the start vertex leaves via its axiom and an R arc returns to it.
    if (!witness && p0 > static_cast<int>(v0)) {
      visited[static_cast<std::size_t>(p0)] = true;
      seq = {static_cast<int>(v0), p0};
      walk(static_cast<int>(v0), p0, false);
      visited[static_cast<std::size_t>(p0)] = false;
    }
    visited[v0] = false;
  }

  Verdict v;
  v.correct = !witness;
  if (witness) v.circuit = *witness;
  return v;
}

Space formula_space(const Formula& f, const Interpretation& interp) {
  if (f.is_atom()) {
    const auto it = interp.find(f.var());
    if (it == interp.end())
      throw std::invalid_argument("interpretation missing variable: " + f.var());
    return f.positive() ? it->second : negation(it->second);
  }
  const Space l = formula_space(f.left(), interp);
  const Space r = formula_space(f.right(), interp);
  switch (f.conn()) {
    case Conn::Par: return par(l, r);
    case Conn::Before: return before(l, r);
    case Conn::Tensor: return tensor(l, r);
  }
  throw std::logic_error("unreachable");
}

namespace {

std::optional<Space> pruned_space(const Formula& f, std::string& path,
                                  const std::set<std::string>& cuts,
                                  const Interpretation& interp) {
  if (cuts.count(path)) return std::nullopt;
  if (f.is_atom()) return formula_space(f, interp);
  path.push_back('l');
  const auto l = pruned_space(f.left(), path, cuts, interp);
  path.back() = 'r';
  const auto r = pruned_space(f.right(), path, cuts, interp);
  path.pop_back();
  if (l && r) {
    switch (f.conn()) {
      case Conn::Par: return par(*l, *r);
      case Conn::Before: return before(*l, *r);
      case Conn::Tensor: return tensor(*l, *r);
    }
  }
  return l ? l : r;
}

}  // namespace

Space conclusion_space(const ProofStructure& ps, const Interpretation& interp) {
  validate_structure(ps);
  std::set<std::string> cuts(ps.cuts.begin(), ps.cuts.end());
  std::string path;
  const auto space = pruned_space(ps.conclusion, path, cuts, interp);
  if (!space) throw std::logic_error("conclusion fully consumed by cuts");
  return *space;
}

TokenSet experiment_results(const ProofStructure& ps, const Interpretation& interp) {
  validate_structure(ps);
  const std::vector<AtomOcc> occs = atom_occurrences(ps.conclusion);
  const std::set<std::string> cuts(ps.cuts.begin(), ps.cuts.end());

  std::vector<const std::vector<Token>*> webs;
  webs.reserve(ps.axioms.size());
  for (const auto& [i, j] : ps.axioms) {
    (void)j;
    const auto it = interp.find(occs[static_cast<std::size_t>(i)].var);
    if (it == interp.end())
      throw std::invalid_argument("interpretation missing variable: " +
                                  occs[static_cast<std::size_t>(i)].var);
    webs.push_back(&it->second.web());
  }
  for (const auto* w : webs)
    if (w->empty()) return {};

  struct Eval {
    const std::set<std::string>* cuts;
    const std::vector<std::optional<Token>>* val;
    bool ok = true;

    std::pair<Token, std::optional<Token>> walk(const Formula& f, std::string& path,
                                                std::size_t& occ) {
      if (f.is_atom()) {
        const Token t = *(*val)[occ++];
        return {t, t};
      }
      path.push_back('l');
      const auto l = walk(f.left(), path, occ);
      path.back() = 'r';
      const auto r = walk(f.right(), path, occ);
      path.pop_back();
      const Token full = Token::pair(l.first, r.first);
      if (cuts->count(path)) {
        // A cut succeeds when the two dual sides carry the same value.
        if (!(l.first == r.first)) ok = false;
        return {full, std::nullopt};
      }
      std::optional<Token> pruned;
      if (l.second && r.second)
        pruned = Token::pair(*l.second, *r.second);
      else
        pruned = l.second ? l.second : r.second;
      return {full, pruned};
    }
  };

  TokenSet results;
  std::vector<std::size_t> idx(ps.axioms.size(), 0);
  for (;;) {
    std::vector<std::optional<Token>> val(occs.size());
    for (std::size_t k = 0; k < ps.axioms.size(); ++k) {
      const Token& t = (*webs[k])[idx[k]];
      val[static_cast<std::size_t>(ps.axioms[k].first)] = t;
      val[static_cast<std::size_t>(ps.axioms[k].second)] = t;
    }
    Eval ev{&cuts, &val};
    std::string path;
    std::size_t occ = 0;
    const auto [full, pruned] = ev.walk(ps.conclusion, path, occ);
    (void)full;
    if (ev.ok) {
      if (!pruned) throw std::logic_error("conclusion fully consumed by cuts");
      results.insert(*pruned);
    }
    std::size_t k = ps.axioms.size();
    while (k > 0 && ++idx[k - 1] == webs[k - 1]->size()) idx[--k] = 0;
    if (k == 0 || ps.axioms.empty()) break;
  }
  return results;
}

std::vector<std::pair<std::string, Space>> default_catalog() {
  const Token star = Token::atom("*");
  const Token t0 = Token::atom("0");
  const Token t1 = Token::atom("1");
  const Token t2 = Token::atom("2");
  return {
      {"one", Space({star}, {})},
      {"coh2", Space({t0, t1}, {{t0, t1}})},
      {"incoh2", Space({t0, t1}, {})},
      {"mix3", Space({t0, t1, t2}, {{t0, t1}})},
  };
}

std::vector<std::vector<std::pair<int, int>>> all_axiom_matchings(const Formula& f) {
  const std::vector<AtomOcc> occs = atom_occurrences(f);
  std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (const AtomOcc& o : occs)
    (o.positive ? groups[o.var].first : groups[o.var].second).push_back(o.index);
  for (const auto& [var, g] : groups)
    if (g.first.size() != g.second.size()) return {};

  std::vector<std::vector<std::pair<int, int>>> acc = {{}};
  for (const auto& [var, g] : groups) {
    std::vector<int> perm = g.second;
    std::sort(perm.begin(), perm.end());
    std::vector<std::vector<std::pair<int, int>>> next;
    do {
      for (const auto& base : acc) {
        auto matching = base;
        for (std::size_t i = 0; i < g.first.size(); ++i)
          matching.emplace_back(g.first[i], perm[i]);
        next.push_back(std::move(matching));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc = std::move(next);
  }
  return acc;
}

SemanticReport semantic_correctness_check(
    const ProofStructure& ps,
    std::span<const std::pair<std::string, Space>> catalog) {
  SemanticReport rep;
  rep.structurally_correct = check_correctness(ps).correct;

  std::vector<std::string> vars;
  for (const AtomOcc& o : atom_occurrences(ps.conclusion)) vars.push_back(o.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (catalog.empty()) return rep;

  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Interpretation interp;
    SemanticEntry entry;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      interp.emplace(vars[i], catalog[idx[i]].second);
      entry.assignment.emplace_back(vars[i], catalog[idx[i]].first);
    }
    entry.clique = is_clique(conclusion_space(ps, interp),
                             experiment_results(ps, interp));
    rep.all_clique = rep.all_clique && entry.clique;
    rep.some_non_clique = rep.some_non_clique || !entry.clique;
    rep.entries.push_back(std::move(entry));

    std::size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == catalog.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return rep;
}

std::string structure_dot(const ProofStructure& ps) {
  validate_structure(ps);
  const std::vector<AtomOcc> occs = atom_occurrences(ps.conclusion);
  const Dicograph d = dicograph_of(ps.conclusion);

  std::vector<int> order(occs.size());
  for (std::size_t i = 0; i < occs.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return occs[static_cast<std::size_t>(a)].display() <
           occs[static_cast<std::size_t>(b)].display();
  });
  std::vector<int> rank(occs.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

  std::ostringstream outs;
  outs << "digraph structure {\n";
  for (std::size_t k = 0; k < order.size(); ++k)
    outs << "  n" << k << " [label=\""
         << occs[static_cast<std::size_t>(order[k])].display() << "\"];\n";

  std::vector<std::pair<int, int>> arcs, edges, blues;
  for (const auto& [i, j] : d.arcs)
    arcs.emplace_back(rank[static_cast<std::size_t>(i)], rank[static_cast<std::size_t>(j)]);
  for (const auto& [i, j] : d.edges) {
    const int a = rank[static_cast<std::size_t>(i)];
    const int b = rank[static_cast<std::size_t>(j)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (const auto& [i, j] : ps.axioms) {
    const int a = rank[static_cast<std::size_t>(i)];
    const int b = rank[static_cast<std::size_t>(j)];
    blues.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(arcs.begin(), arcs.end());
  std::sort(edges.begin(), edges.end());
  std::sort(blues.begin(), blues.end());
  for (const auto& [a, b] : arcs) outs << "  n" << a << " -> n" << b << ";\n";
  for (const auto& [a, b] : edges)
    outs << "  n" << a << " -> n" << b << " [dir=none];\n";
  for (const auto& [a, b] : blues)
    outs << "  n" << a << " -> n" << b << " [dir=none, style=bold];\n";
  outs << "}\n";
  return outs.str();
}

}  // namespace pomcoh
