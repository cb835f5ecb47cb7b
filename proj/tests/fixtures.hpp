// Shared grammar and system fixtures for the test suites.
#pragma once

#include <random>
#include <set>

#include "insdel/core.hpp"
#include "insdel/grammar.hpp"

namespace insdel::tests {

// SGNF grammar with L = {a}:
//   S -> AX, X -> Za, Z -> S'B, S' -> lambda, AB -> lambda
inline Grammar make_g1() {
  Grammar g;
  g.name = "g1";
  g.kind = GrammarKind::sgnf;
  g.nonterminals = {sym("S"), sym("X"), sym("Z"), sym("Sp"),
                    sym("A"), sym("B"), sym("C"), sym("D")};
  g.terminals = {sym("a")};
  g.start = sym("S");
  g.nprime = {sym("S"), sym("X"), sym("Z"), sym("Sp")};
  g.ndouble = {sym("A"), sym("B"), sym("C"), sym("D")};
  g.sprime = sym("Sp");
  g.rules.push_back(make_grammar_rule("p1", {sym("S")}, symstr({"A", "X"})));
  g.rules.push_back(make_grammar_rule("p2", {sym("X")}, symstr({"Z", "a"})));
  g.rules.push_back(make_grammar_rule("p3", {sym("Z")}, symstr({"Sp", "B"})));
  g.rules.push_back(make_grammar_rule("p4", {sym("Sp")}, {}));
  g.rules.push_back(make_grammar_rule("p5", symstr({"A", "B"}), {}));
  validate_grammar(g);
  return g;
}

// Random context grammar with L = a*: r1: S -> aS, r2: S -> lambda
inline Grammar make_g2() {
  Grammar g;
  g.name = "g2";
  g.kind = GrammarKind::rc;
  g.nonterminals = {sym("S")};
  g.terminals = {sym("a")};
  g.start = sym("S");
  g.rules.push_back(make_grammar_rule("r1", {sym("S")}, symstr({"a", "S"})));
  g.rules.push_back(make_grammar_rule("r2", {sym("S")}, {}));
  validate_grammar(g);
  return g;
}

// rc grammar with the single erasing rule p: S -> lambda over V = {S, a}
inline Grammar make_erase_only() {
  Grammar g;
  g.name = "erase_only";
  g.kind = GrammarKind::rc;
  g.nonterminals = {sym("S")};
  g.terminals = {sym("a")};
  g.start = sym("S");
  g.rules.push_back(make_grammar_rule("p", {sym("S")}, {}));
  validate_grammar(g);
  return g;
}

// rc grammar with the single binary rule q: S -> YZ (Y, Z nonterminals)
inline Grammar make_binary_only() {
  Grammar g;
  g.name = "binary_only";
  g.kind = GrammarKind::rc;
  g.nonterminals = {sym("S"), sym("Y"), sym("Z")};
  g.terminals = {};
  g.start = sym("S");
  g.rules.push_back(make_grammar_rule("q", {sym("S")}, symstr({"Y", "Z"})));
  validate_grammar(g);
  return g;
}

// Template-shape grammar from the direct left-linear case: X -> aY plus
// AB -> lambda. Not strict SGNF (terminal in first rhs position), but
// template-compilable.
inline Grammar make_xay() {
  Grammar g;
  g.name = "xay";
  g.kind = GrammarKind::sgnf;
  g.nonterminals = {sym("X"), sym("Y"), sym("Sp2"),
                    sym("A"), sym("B"), sym("C"), sym("D")};
  g.terminals = {sym("a")};
  g.start = sym("X");
  g.nprime = {sym("X"), sym("Y"), sym("Sp2")};
  g.ndouble = {sym("A"), sym("B"), sym("C"), sym("D")};
  g.sprime = sym("Sp2");
  g.rules.push_back(make_grammar_rule("p", {sym("X")}, symstr({"a", "Y"})));
  g.rules.push_back(make_grammar_rule("r", symstr({"A", "B"}), {}));
  validate_grammar(g);
  return g;
}

// Deterministic generator of valid random-context grammars.
inline Grammar random_rc_grammar(std::mt19937& rng, int index) {
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  Grammar g;
  g.name = "rc_rand_" + std::to_string(index);
  g.kind = GrammarKind::rc;
  std::size_t nn = 1 + pick(3);
  std::size_t nt = 1 + pick(2);
  for (std::size_t i = 0; i < nn; ++i)
    g.nonterminals.push_back(sym("N" + std::to_string(i)));
  for (std::size_t i = 0; i < nt; ++i)
    g.terminals.push_back(sym("t" + std::to_string(i)));
  g.start = g.nonterminals[0];
  std::size_t nrules = 1 + pick(6);
  std::vector<Symbol> pool = g.nonterminals;
  pool.insert(pool.end(), g.terminals.begin(), g.terminals.end());
  for (std::size_t i = 0; i < nrules; ++i) {
    SymString rhs;
    std::size_t len = pick(5);  // 0..4
    for (std::size_t j = 0; j < len; ++j) rhs.push_back(pool[pick(pool.size())]);
    std::vector<SymString> permit, forbid;
    for (std::size_t j = pick(3); j > 1; --j)
      permit.push_back({g.nonterminals[pick(nn)]});
    for (std::size_t j = pick(3); j > 1; --j)
      forbid.push_back({g.nonterminals[pick(nn)]});
    g.rules.push_back(make_grammar_rule("g" + std::to_string(i),
                                        {g.nonterminals[pick(nn)]},
                                        std::move(rhs), std::move(permit),
                                        std::move(forbid)));
  }
  validate_grammar(g);
  return g;
}

// Deterministic generator of valid SGNF grammars: one or two erasing rules
// plus one to four linear rules respecting rhs uniqueness.
inline Grammar random_sgnf_grammar(std::mt19937& rng, int index) {
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  Grammar g;
  g.name = "sgnf_rand_" + std::to_string(index);
  g.kind = GrammarKind::sgnf;
  std::size_t np = 2 + pick(3);  // S, Sp, plus up to 2 more
  g.nprime.push_back(sym("S"));
  g.nprime.push_back(sym("Sp"));
  for (std::size_t i = 2; i < np; ++i)
    g.nprime.push_back(sym("P" + std::to_string(i)));
  g.ndouble = {sym("A"), sym("B"), sym("C"), sym("D")};
  g.nonterminals = g.nprime;
  g.nonterminals.insert(g.nonterminals.end(), g.ndouble.begin(),
                        g.ndouble.end());
  g.terminals = {sym("t0"), sym("t1")};
  g.start = sym("S");
  g.sprime = sym("Sp");

  std::set<SymString> used_rhs;
  int id = 0;
  std::size_t linear = 1 + pick(4);
  for (std::size_t i = 0; i < linear; ++i) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      Symbol x = g.nprime[pick(np)];
      bool left = pick(2) == 0;
      SymString rhs;
      if (left) {
        Symbol b = g.ndouble[pick(4)];
        Symbol y = g.nprime[pick(np)];
        if (y == x) continue;
        rhs = {b, y};
      } else {
        Symbol y = g.nprime[pick(np)];
        if (y == x) continue;
        std::vector<Symbol> tail = g.terminals;
        tail.insert(tail.end(), g.ndouble.begin(), g.ndouble.end());
        rhs = {y, tail[pick(tail.size())]};
      }
      bool exempt = rhs[0] == g.start || rhs[0] == g.sprime;
      if (!exempt && used_rhs.count(rhs)) continue;
      used_rhs.insert(rhs);
      g.rules.push_back(
          make_grammar_rule("g" + std::to_string(id++), {x}, rhs));
      break;
    }
  }
  g.rules.push_back(make_grammar_rule("g" + std::to_string(id++),
                                      symstr({"A", "B"}), {}));
  if (pick(2) == 0)
    g.rules.push_back(make_grammar_rule("g" + std::to_string(id++),
                                        symstr({"C", "D"}), {}));
  if (pick(2) == 0)
    g.rules.push_back(
        make_grammar_rule("g" + std::to_string(id++), {sym("Sp")}, {}));
  validate_grammar(g);
  return g;
}

}  // namespace insdel::tests
