#include "insdel/grammar.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "bfs_impl.hpp"

namespace insdel {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

std::unordered_set<std::uint32_t> id_set(const std::vector<Symbol>& syms) {
  std::unordered_set<std::uint32_t> out;
  for (Symbol s : syms) out.insert(s.id());
  return out;
}

}  // namespace

std::string show(GrammarKind k) {
  switch (k) {
    case GrammarKind::cf: return "cf";
    case GrammarKind::rc: return "rc";
    case GrammarKind::sc: return "sc";
    case GrammarKind::sgnf: return "sgnf";
  }
  return "?";
}

void GrammarRule::canonicalize() {
  auto tidy = [](std::vector<SymString>& words) {
    std::sort(words.begin(), words.end(), canonical_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
  };
  tidy(permit);
  tidy(forbid);
}

GrammarRule make_grammar_rule(std::string id, SymString lhs, SymString rhs,
                              std::vector<SymString> permit,
                              std::vector<SymString> forbid) {
  GrammarRule r;
  r.id = std::move(id);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.permit = std::move(permit);
  r.forbid = std::move(forbid);
  r.canonicalize();
  return r;
}

void validate_grammar(const Grammar& g) {
  const std::string who = "grammar '" + g.name + "'";
  auto nset = id_set(g.nonterminals);
  auto tset = id_set(g.terminals);
  require(nset.size() == g.nonterminals.size(), who + ": duplicate nonterminal");
  require(tset.size() == g.terminals.size(), who + ": duplicate terminal");
  for (Symbol t : g.terminals)
    require(!nset.count(t.id()),
            who + ": '" + t.name() + "' is both nonterminal and terminal");
  require(g.start.valid() && nset.count(g.start.id()),
          who + ": start symbol not a nonterminal");
  auto over = [&](const SymString& w) {
    for (Symbol s : w)
      if (!nset.count(s.id()) && !tset.count(s.id())) return s.name();
    return std::string();
  };

  if (g.kind == GrammarKind::sgnf) {
    require(g.ndouble.size() == 4, who + ": sgnf requires four ndouble symbols");
    auto np = id_set(g.nprime);
    auto nd = id_set(g.ndouble);
    for (Symbol s : g.nprime)
      require(nset.count(s.id()) && !nd.count(s.id()),
              who + ": nprime symbol '" + s.name() + "' misplaced");
    for (Symbol s : g.ndouble)
      require(nset.count(s.id()), who + ": ndouble symbol '" + s.name() +
                                      "' not a nonterminal");
    require(np.size() + nd.size() == nset.size(),
            who + ": nprime and ndouble must partition the nonterminals");
    require(np.count(g.start.id()), who + ": start must belong to nprime");
    require(g.sprime.valid() && np.count(g.sprime.id()),
            who + ": sprime must be declared and belong to nprime");
  } else {
    require(g.nprime.empty() && g.ndouble.empty() && !g.sprime.valid(),
            who + ": nprime/ndouble/sprime are sgnf-only");
  }

  std::unordered_set<std::string> ids;
  for (const GrammarRule& r : g.rules) {
    require(ids.insert(r.id).second, who + ": duplicate rule id '" + r.id + "'");
    require(!r.lhs.empty(), who + ": rule '" + r.id + "' has empty lhs");
    auto bad = over(r.lhs);
    if (bad.empty()) bad = over(r.rhs);
    require(bad.empty(),
            who + ": rule '" + r.id + "' uses undeclared symbol '" + bad + "'");
    if (g.kind == GrammarKind::sgnf) {
      require(r.lhs.size() <= 2, who + ": rule '" + r.id + "' lhs too long");
      for (Symbol s : r.lhs)
        require(nset.count(s.id()),
                who + ": rule '" + r.id + "' lhs must be nonterminal");
    } else {
      require(r.lhs.size() == 1 && nset.count(r.lhs[0].id()),
              who + ": rule '" + r.id + "' lhs must be a single nonterminal");
    }
    if (g.kind == GrammarKind::cf || g.kind == GrammarKind::sgnf) {
      require(r.permit.empty() && r.forbid.empty(),
              who + ": rule '" + r.id + "' may not carry conditions");
    } else {
      for (const auto* words : {&r.permit, &r.forbid})
        for (const SymString& w : *words) {
          require(!w.empty(),
                  who + ": rule '" + r.id + "' has an empty condition word");
          bad = over(w);
          require(bad.empty(), who + ": rule '" + r.id +
                                   "' condition uses undeclared symbol '" +
                                   bad + "'");
          if (g.kind == GrammarKind::rc)
            require(w.size() == 1 && nset.count(w[0].id()),
                    who + ": rule '" + r.id +
                        "' rc conditions must be single nonterminals");
        }
    }
  }
}

SgnfReport validate_sgnf(const Grammar& g) {
  if (g.kind != GrammarKind::sgnf)
    throw Error("validate_sgnf: grammar '" + g.name + "' has kind " +
                show(g.kind));
  validate_grammar(g);
  SgnfReport report;
  auto flag = [&](const std::string& id, std::string reason) {
    report.valid = false;
    report.violations.push_back({id, std::move(reason)});
  };
  auto np = id_set(g.nprime);
  auto nd = id_set(g.ndouble);
  auto t = id_set(g.terminals);
  const Symbol a = g.ndouble[0], b = g.ndouble[1];
  const Symbol c = g.ndouble[2], d = g.ndouble[3];

  // rhs -> id of the first linear rule carrying it
  std::map<SymString, std::string> linear_rhs;
  for (const GrammarRule& r : g.rules) {
    if (r.lhs.size() == 2) {
      bool ab = r.lhs[0] == a && r.lhs[1] == b;
      bool cd = r.lhs[0] == c && r.lhs[1] == d;
      if (!(ab || cd))
        flag(r.id, "two-symbol lhs must be the declared erasing pair");
      else if (!r.rhs.empty())
        flag(r.id, "erasing rule must have empty rhs");
      continue;
    }
    const Symbol x = r.lhs[0];
    if (r.rhs.empty()) {
      if (!(x == g.sprime)) flag(r.id, "only the sprime rule may erase");
      continue;
    }
    if (r.rhs.size() != 2) {
      flag(r.id, "rhs must have exactly two symbols");
      continue;
    }
    if (!np.count(x.id())) {
      flag(r.id, "lhs of a linear rule must belong to nprime");
      continue;
    }
    const Symbol first = r.rhs[0], second = r.rhs[1];
    if (nd.count(first.id()) && np.count(second.id())) {
      if (second == x) flag(r.id, "X != Y required");
    } else if (np.count(first.id()) &&
               (t.count(second.id()) || nd.count(second.id()))) {
      if (first == x) flag(r.id, "X != Y required");
    } else {
      flag(r.id, "rhs " + show(r.rhs) + " matches no sgnf shape");
      continue;
    }
    bool exempt = first == g.start || first == g.sprime;
    auto [it, fresh] = linear_rhs.emplace(r.rhs, r.id);
    if (!fresh && !exempt)
      flag(r.id, "right-hand side " + show(r.rhs) + " duplicates rule '" +
                     it->second + "'");
  }
  return report;
}

Grammar normalize_rc_rhs(const Grammar& g) {
  if (g.kind != GrammarKind::rc)
    throw Error("normalize_rc_rhs: grammar '" + g.name + "' has kind " +
                show(g.kind));
  validate_grammar(g);

  auto needs_split = [](const GrammarRule& r) {
    return r.rhs.size() != 0 && r.rhs.size() != 2;
  };

  std::unordered_set<std::string> taken;
  for (Symbol s : g.nonterminals) taken.insert(s.name());
  for (Symbol s : g.terminals) taken.insert(s.name());

  // Fresh W symbols per replaced rule, plus the shared forbid set Q_W.
  std::unordered_map<std::string, std::vector<Symbol>> chain;
  std::vector<SymString> qw;
  for (const GrammarRule& r : g.rules) {
    if (!needs_split(r)) continue;
    std::vector<Symbol> ws;
    for (std::size_t i = 1; i <= r.rhs.size(); ++i) {
      std::string name = "W_" + r.id + "_" + std::to_string(i);
      if (taken.count(name))
        throw Error("normalize_rc_rhs: fresh symbol '" + name +
                    "' collides with a grammar symbol");
      ws.push_back(Symbol::intern(name));
      qw.push_back({ws.back()});
    }
    chain.emplace(r.id, std::move(ws));
  }

  Grammar out = g;
  out.rules.clear();
  for (const GrammarRule& r : g.rules) {
    if (!needs_split(r)) {
      out.rules.push_back(r);
      continue;
    }
    const auto& ws = chain.at(r.id);
    const std::size_t n = r.rhs.size();
    std::vector<SymString> forbid = r.forbid;
    forbid.insert(forbid.end(), qw.begin(), qw.end());
    out.rules.push_back(make_grammar_rule(r.id + ".w0", r.lhs,
                                          SymString{r.rhs[0], ws[0]}, r.permit,
                                          std::move(forbid)));
    for (std::size_t i = 1; i < n; ++i)
      out.rules.push_back(make_grammar_rule(r.id + ".w" + std::to_string(i),
                                            SymString{ws[i - 1]},
                                            SymString{r.rhs[i], ws[i]}));
    out.rules.push_back(make_grammar_rule(r.id + ".w" + std::to_string(n),
                                          SymString{ws[n - 1]}, SymString{}));
  }
  // keep nonterminal order deterministic: original first, then W chains in
  // rule order
  for (const GrammarRule& r : g.rules) {
    auto it = chain.find(r.id);
    if (it == chain.end()) continue;
    for (Symbol w : it->second) out.nonterminals.push_back(w);
  }
  validate_grammar(out);
  return out;
}

Grammar eliminate_lambda(const Grammar& g) {
  if (g.kind != GrammarKind::cf)
    throw Error("eliminate_lambda: grammar '" + g.name + "' has kind " +
                show(g.kind));
  validate_grammar(g);

  std::unordered_set<std::uint32_t> nullable;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GrammarRule& r : g.rules) {
      if (nullable.count(r.lhs[0].id())) continue;
      bool all = true;
      for (Symbol s : r.rhs)
        if (!nullable.count(s.id())) all = false;
      if (all) {
        nullable.insert(r.lhs[0].id());
        changed = true;
      }
    }
  }

  Grammar out = g;
  out.rules.clear();
  std::unordered_set<std::string> seen;  // lhs|rhs dedup keys
  auto key = [](const SymString& lhs, const SymString& rhs) {
    std::string k = show(lhs);
    k += "->";
    k += show(rhs);
    return k;
  };
  for (const GrammarRule& r : g.rules) {
    std::vector<std::size_t> holes;  // nullable positions in the rhs
    for (std::size_t i = 0; i < r.rhs.size(); ++i)
      if (nullable.count(r.rhs[i].id())) holes.push_back(i);
    if (holes.size() > 20)
      throw Error("eliminate_lambda: rule '" + r.id +
                  "' has too many nullable positions");
    std::size_t variant = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << holes.size());
         ++mask) {
      SymString rhs;
      for (std::size_t i = 0, h = 0; i < r.rhs.size(); ++i) {
        if (h < holes.size() && holes[h] == i) {
          bool drop = mask & (std::size_t{1} << h);
          ++h;
          if (drop) continue;
        }
        rhs.push_back(r.rhs[i]);
      }
      if (rhs.empty()) continue;
      if (!seen.insert(key(r.lhs, rhs)).second) continue;
      std::string id = mask == 0 ? r.id : r.id + ".e" + std::to_string(++variant);
      out.rules.push_back(make_grammar_rule(std::move(id), r.lhs, std::move(rhs)));
    }
  }
  validate_grammar(out);
  return out;
}

std::vector<StepTriple> grammar_successors(const Grammar& g,
                                           const SymString& w) {
  std::vector<StepTriple> out;
  FormIndex idx(w);
  for (const GrammarRule& r : g.rules) {
    bool ok = true;
    for (const SymString& x : r.permit)
      if (!idx.contains(x)) ok = false;
    for (const SymString& y : r.forbid)
      if (idx.contains(y)) ok = false;
    if (!ok) continue;
    if (w.size() < r.lhs.size()) continue;
    for (std::size_t pos = 0; pos + r.lhs.size() <= w.size(); ++pos) {
      if (!matches_at(w, pos, r.lhs)) continue;
      SymString next;
      next.reserve(w.size() - r.lhs.size() + r.rhs.size());
      next.insert(next.end(), w.begin(), w.begin() + pos);
      next.insert(next.end(), r.rhs.begin(), r.rhs.end());
      next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
      out.push_back({r.id, pos, std::move(next)});
    }
  }
  return out;
}

EnumerationResult derive_grammar(const Grammar& g, const SearchBounds& bounds,
                                 const SearchOptions& opts) {
  validate_grammar(g);
  std::vector<SymString> starts{SymString{g.start}};
  auto outcome = detail::bounded_bfs(
      starts, bounds, opts, [&g](const SymString& w, std::vector<SymString>& out) {
        for (StepTriple& t : grammar_successors(g, w))
          out.push_back(std::move(t.result));
      });
  EnumerationResult res;
  res.exhausted = !outcome.budget_hit;
  res.states = outcome.visited.size();
  res.hit_form_cap = outcome.form_capped;
  res.hit_step_cap = outcome.step_capped;
  auto terminals = id_set(g.terminals);
  for (const SymString& w : outcome.visited) {
    if (w.size() > bounds.max_terminal_len) continue;
    bool all = true;
    for (Symbol s : w)
      if (!terminals.count(s.id())) all = false;
    if (all) res.terminals.push_back(w);
  }
  std::sort(res.terminals.begin(), res.terminals.end(), canonical_less);
  return res;
}

}  // namespace insdel
