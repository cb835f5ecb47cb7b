#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "insdel/grammar.hpp"

using namespace insdel;
using insdel::tests::make_g1;
using insdel::tests::make_g2;

namespace {

Grammar cf(std::string name, std::vector<Symbol> nonterminals,
           std::vector<Symbol> terminals, Symbol start,
           std::vector<GrammarRule> rules) {
  Grammar g;
  g.name = std::move(name);
  g.kind = GrammarKind::cf;
  g.nonterminals = std::move(nonterminals);
  g.terminals = std::move(terminals);
  g.start = start;
  g.rules = std::move(rules);
  validate_grammar(g);
  return g;
}

std::vector<SymString> oracle(const Grammar& g, std::size_t cap,
                              std::size_t form_cap = 0) {
  SearchBounds b;
  b.max_terminal_len = cap;
  b.max_form_len = form_cap ? form_cap : cap + 8;
  auto res = derive_grammar(g, b);
  REQUIRE(res.exhausted);
  return res.terminals;
}

}  // namespace

TEST_CASE("validate_sgnf: accepted shapes") {
  auto report = validate_sgnf(make_g1());
  CHECK(report.valid);
  CHECK(report.violations.empty());
}

TEST_CASE("validate_sgnf: X != Y and shape violations") {
  Grammar g = make_g1();
  g.rules.push_back(
      make_grammar_rule("bad1", {sym("X")}, symstr({"B", "X"})));
  g.rules.push_back(
      make_grammar_rule("bad2", {sym("X")}, symstr({"a", "X"})));
  auto report = validate_sgnf(g);
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].rule_id == "bad1");
  CHECK(report.violations[0].reason == "X != Y required");
  CHECK(report.violations[1].rule_id == "bad2");
}

TEST_CASE("validate_sgnf: duplicate right-hand sides") {
  Grammar g = make_g1();
  // duplicate of p2's rhs [Z a] under a different lhs
  g.rules.push_back(
      make_grammar_rule("dup", {sym("Sp")}, symstr({"Z", "a"})));
  auto report = validate_sgnf(g);
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].rule_id == "dup");

  // rhs starting with the start symbol is exempt
  Grammar h = make_g1();
  h.rules.push_back(make_grammar_rule("e1", {sym("X")}, symstr({"S", "a"})));
  h.rules.push_back(make_grammar_rule("e2", {sym("Z")}, symstr({"S", "a"})));
  CHECK(validate_sgnf(h).valid);
}

TEST_CASE("validate_sgnf: empty rule set is vacuously valid") {
  Grammar g = make_g1();
  g.rules.clear();
  CHECK(validate_sgnf(g).valid);
  CHECK_THROWS_AS((void)validate_sgnf(make_g2()), Error);  // wrong kind
}

TEST_CASE("normalize_rc_rhs: |rhs| of 0 and 2 pass through") {
  Grammar g = make_g2();
  Grammar n = normalize_rc_rhs(g);
  CHECK(n.rules == g.rules);
}

TEST_CASE("normalize_rc_rhs: unary rule becomes head plus erasing chain") {
  Grammar g;
  g.name = "unary";
  g.kind = GrammarKind::rc;
  g.nonterminals = {sym("S")};
  g.terminals = {sym("a")};
  g.start = sym("S");
  g.rules.push_back(make_grammar_rule("r", {sym("S")}, symstr({"a"}),
                                      {{sym("S")}}, {}));
  validate_grammar(g);
  Grammar n = normalize_rc_rhs(g);
  REQUIRE(n.rules.size() == 2);
  CHECK(n.rules[0].lhs == symstr({"S"}));
  CHECK(n.rules[0].rhs == symstr({"a", "W_r_1"}));
  CHECK(n.rules[0].permit == std::vector<SymString>{{sym("S")}});
  CHECK(n.rules[0].forbid == std::vector<SymString>{{sym("W_r_1")}});
  CHECK(n.rules[1].lhs == symstr({"W_r_1"}));
  CHECK(n.rules[1].rhs.empty());
  CHECK(n.rules[1].permit.empty());
  CHECK(n.rules[1].forbid.empty());
  for (auto& r : n.rules) CHECK((r.rhs.size() == 0 || r.rhs.size() == 2));
}

TEST_CASE("normalize_rc_rhs: bounded language is preserved") {
  Grammar g;
  g.name = "asa";
  g.kind = GrammarKind::rc;
  g.nonterminals = {sym("S")};
  g.terminals = {sym("a")};
  g.start = sym("S");
  g.rules.push_back(
      make_grammar_rule("r1", {sym("S")}, symstr({"a", "S", "a"})));
  g.rules.push_back(make_grammar_rule("r2", {sym("S")}, {}));
  validate_grammar(g);
  Grammar n = normalize_rc_rhs(g);
  auto before = oracle(g, 4);
  auto after = oracle(n, 4, 12);
  CHECK(before == after);
  std::vector<SymString> want{{}, symstr({"a", "a"}),
                              symstr({"a", "a", "a", "a"})};
  std::sort(want.begin(), want.end(), canonical_less);
  CHECK(before == want);
}

TEST_CASE("eliminate_lambda: grammars without empty rules are unchanged") {
  auto g = cf("plain", {sym("S")}, {sym("a")}, sym("S"),
              {make_grammar_rule("r1", {sym("S")}, symstr({"a", "S"})),
               make_grammar_rule("r2", {sym("S")}, symstr({"a"}))});
  Grammar e = eliminate_lambda(g);
  CHECK(e.rules == g.rules);
}

TEST_CASE("eliminate_lambda: unreachable nullable leaves rules alone") {
  auto g = cf("unreach", {sym("S"), sym("Z")}, {sym("a")}, sym("S"),
              {make_grammar_rule("r1", {sym("S")}, symstr({"a", "S"})),
               make_grammar_rule("r2", {sym("S")}, symstr({"a"})),
               make_grammar_rule("z", {sym("Z")}, {})});
  Grammar e = eliminate_lambda(g);
  REQUIRE(e.rules.size() == 2);
  CHECK(e.rules[0].rhs == symstr({"a", "S"}));
  CHECK(e.rules[1].rhs == symstr({"a"}));
}

TEST_CASE("eliminate_lambda: language preserved on non-empty strings") {
  auto g = cf("sas", {sym("S")}, {sym("a")}, sym("S"),
              {make_grammar_rule("r1", {sym("S")}, symstr({"S", "a", "S"})),
               make_grammar_rule("r2", {sym("S")}, symstr({"a"}))});
  Grammar e = eliminate_lambda(g);
  for (const GrammarRule& r : e.rules) CHECK(!r.rhs.empty());
  CHECK(oracle(g, 4) == oracle(e, 4));
}

TEST_CASE("derive_grammar: single erasing rule gives the empty string") {
  auto g = cf("eps", {sym("S")}, {sym("a")}, sym("S"),
              {make_grammar_rule("r", {sym("S")}, {})});
  auto res = oracle(g, 2);
  REQUIRE(res.size() == 1);
  CHECK(res[0].empty());
}

TEST_CASE("derive_grammar: a-star up to length 2") {
  auto res = oracle(make_g2(), 2);
  std::vector<SymString> want{{}, symstr({"a"}), symstr({"a", "a"})};
  std::sort(want.begin(), want.end(), canonical_less);
  CHECK(res == want);
}

TEST_CASE("derive_grammar: sgnf two-stage derivation of G1") {
  auto res = oracle(make_g1(), 3, 12);
  REQUIRE(res.size() == 1);
  CHECK(res[0] == symstr({"a"}));
}

TEST_CASE("grammar_successors: conditions gate on the whole form") {
  Grammar g;
  g.name = "gated";
  g.kind = GrammarKind::rc;
  g.nonterminals = {sym("S"), sym("Z")};
  g.terminals = {sym("a")};
  g.start = sym("S");
  g.rules.push_back(make_grammar_rule("r", {sym("S")}, symstr({"a"}), {},
                                      {{sym("Z")}}));
  validate_grammar(g);
  CHECK(grammar_successors(g, symstr({"S"})).size() == 1);
  CHECK(grammar_successors(g, symstr({"S", "Z"})).empty());
}
