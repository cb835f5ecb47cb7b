#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "insdel/construct.hpp"
#include "insdel/engine.hpp"
#include "insdel/grammar.hpp"
#include "insdel/verify.hpp"

using namespace insdel;
using insdel::tests::make_binary_only;
using insdel::tests::make_erase_only;
using insdel::tests::make_g1;
using insdel::tests::make_g2;
using insdel::tests::make_xay;

namespace {

bool has_word(const std::vector<SymString>& words, const SymString& w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

const ConditionedRule& rule_by_id(const InsDelSystem& sys,
                                  const std::string& id) {
  for (const ConditionedRule& r : sys.rules)
    if (r.id == id) return r;
  throw Error("missing rule " + id);
}

}  // namespace

TEST_CASE("normalization_condition: exact word set for a singleton base") {
  auto qn = normalization_condition({sym("a")});
  CHECK(qn.size() == 8);  // 2*1*1 + 2*1 + 2*2
  CHECK(has_word(qn, symstr({"hat_a", "hat_a"})));
  CHECK(has_word(qn, symstr({"bar_a", "bar_a"})));
  CHECK(has_word(qn, symstr({"B", "bar_a"})));
  CHECK(has_word(qn, symstr({"hat_a", "E"})));
  CHECK(has_word(qn, symstr({"hat_a", "B"})));
  CHECK(has_word(qn, symstr({"bar_a", "B"})));
  CHECK(has_word(qn, symstr({"E", "hat_a"})));
  CHECK(has_word(qn, symstr({"E", "bar_a"})));
}

TEST_CASE("normalization_condition: membership checks") {
  auto qn = normalization_condition({sym("a")});
  auto free_of = [&](const SymString& w) {
    for (const SymString& q : qn)
      if (contains_subword(w, q)) return false;
    return true;
  };
  CHECK(free_of(symstr({"B", "hat_a", "bar_a", "E"})));
  CHECK_FALSE(free_of(symstr({"B", "bar_a", "E"})));
  CHECK(has_word(qn, symstr({"E", "hat_a"})));
}

TEST_CASE("normalization_condition: size formula for larger bases") {
  for (std::size_t k : {1u, 2u, 3u}) {
    std::vector<Symbol> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(sym("s" + std::to_string(i)));
    auto qn = normalization_condition(v);
    CHECK(qn.size() == 2 * k * k + 2 * k + 2 * (2 * k));
    std::set<SymString> uniq(qn.begin(), qn.end());
    CHECK(uniq.size() == qn.size());
  }
}

TEST_CASE("normalization_condition characterizes delimited coded interiors") {
  // over strings B w E with w built only from coded symbols, avoidance of
  // the condition is exactly the alternating pair shape
  std::vector<Symbol> v{sym("a"), sym("b")};
  auto qn = normalization_condition(v);
  std::vector<Symbol> coded;
  for (Symbol s : v) {
    coded.push_back(hat_symbol(s));
    coded.push_back(bar_symbol(s));
  }
  auto qn_free = [&](const SymString& w) {
    for (const SymString& q : qn)
      if (contains_subword(w, q)) return false;
    return true;
  };
  auto is_pair_shape = [&](const SymString& w) {
    // B (hat bar)+ E with arbitrary letters
    if (w.size() < 4 || w.size() % 2 != 0) return false;
    if (!(w.front() == sym("B")) || !(w.back() == sym("E"))) return false;
    for (std::size_t i = 1; i + 1 < w.size(); i += 2) {
      if (w[i].name().rfind("hat_", 0) != 0) return false;
      if (w[i + 1].name().rfind("bar_", 0) != 0) return false;
    }
    return true;
  };
  // all interiors of length 1..4 over the coded alphabet
  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      SymString w{sym("B")};
      for (std::size_t i = 0; i < len; ++i) w.push_back(coded[idx[i]]);
      w.push_back(sym("E"));
      CHECK(qn_free(w) == is_pair_shape(w));
      ++checked;
      std::size_t at = 0;
      while (at < len && ++idx[at] == coded.size()) idx[at++] = 0;
      if (at == len) break;
    }
  }
  CHECK(checked == 4 + 16 + 64 + 256);
}

TEST_CASE("encode_word and decode_word") {
  CHECK(encode_word({}) == symstr({"B", "E"}));
  CHECK(encode_word({sym("S")}) == symstr({"B", "hat_S", "bar_S", "E"}));
  CHECK(encode_word(symstr({"a", "b"})) ==
        symstr({"B", "hat_a", "bar_a", "hat_b", "bar_b", "E"}));
  CHECK(decode_word({}) == SymString{});
  CHECK(decode_word(symstr({"hat_a", "hat_b"})) == symstr({"a", "b"}));
  CHECK_THROWS_AS((void)decode_word(symstr({"bar_a"})), Error);
}

TEST_CASE("compile_sc22: rule inventory for the single erasing rule") {
  auto out = compile_sc22(make_erase_only());
  const InsDelSystem& sys = out.system;
  // p.1-p.4 plus delete-B, delete-E, delete-bar_a (a the only terminal)
  REQUIRE(sys.rules.size() == 7);
  CHECK(rule_by_id(sys, "p.1").base.mode == RuleMode::insertion);
  CHECK(rule_by_id(sys, "p.1").base.body == symstr({"sharp_p"}));
  CHECK(rule_by_id(sys, "p.2").base.body == symstr({"hat_S"}));
  CHECK(rule_by_id(sys, "p.3").base.body == symstr({"bar_S"}));
  CHECK(rule_by_id(sys, "p.4").base.body == symstr({"sharp_p"}));
  CHECK(rule_by_id(sys, "clean.B").base.body == symstr({"Bmark"}));
  CHECK(rule_by_id(sys, "clean.E").base.body == symstr({"Emark"}));
  CHECK(rule_by_id(sys, "clean.a").base.body == symstr({"bar_a"}));
  // permit of p.1 carries the coded lhs pair
  CHECK(has_word(rule_by_id(sys, "p.1").permit, symstr({"hat_S", "bar_S"})));
  // axiom is the coded start symbol
  REQUIRE(sys.axioms.size() == 1);
  CHECK(sys.axioms[0] == symstr({"Bmark", "hat_S", "bar_S", "Emark"}));
  CHECK(sys.terminals == std::vector<Symbol>{sym("hat_a")});
}

TEST_CASE("compile_sc22: golden erasing-rule simulation reaches B E") {
  auto out = compile_sc22(make_erase_only());
  Trace t{out.system.name, out.system.axioms[0],
          {{"p.1", 1}, {"p.2", 2}, {"p.3", 2}, {"p.4", 1}}};
  auto res = replay(out.system, t);
  REQUIRE(res.ok());
  CHECK(*res.final_form == SymString{out.b, out.e});
}

TEST_CASE("compile_sc22: size and degree contracts") {
  for (const Grammar& g : {make_erase_only(), make_g2(), make_binary_only()}) {
    auto out = compile_sc22(g);
    CHECK(size_of(out.system) == SizeVector{1, 0, 0, 1, 0, 0});
    CHECK(degree_of(out.system) == Degree{2, 2});
    for (const ConditionedRule& r : out.system.rules) {
      for (const SymString& w : r.permit) CHECK(w.size() <= 2);
      for (const SymString& w : r.forbid) CHECK(w.size() <= 2);
    }
  }
}

TEST_CASE("compile_sc22: per-rule template counts") {
  // g2 has one binary and one erasing rule over V={S,a}, T={a}
  auto out = compile_sc22(make_g2());
  CHECK(out.system.rules.size() == 16 + 4 + (2 + 1));
  CHECK(out.dollar_family.size() == 5);
  CHECK(out.sharp_family.size() == 1);
}

TEST_CASE("compile_sc22: original conditions are carried through the coding") {
  Grammar g;
  g.name = "conds";
  g.kind = GrammarKind::rc;
  g.nonterminals = {sym("S"), sym("Z")};
  g.terminals = {sym("a")};
  g.start = sym("S");
  g.rules.push_back(make_grammar_rule("p", {sym("S")}, {}, {{sym("Z")}},
                                      {{sym("S")}}));
  validate_grammar(g);
  auto out = compile_sc22(g);
  const ConditionedRule& p1 = rule_by_id(out.system, "p.1");
  CHECK(has_word(p1.permit, symstr({"hat_Z", "bar_Z"})));
  CHECK(has_word(p1.forbid, symstr({"hat_S", "bar_S"})));
}

TEST_CASE("compile_sc22: bounded semantics of the erasing-only grammar") {
  auto out = compile_sc22(make_erase_only());
  SearchBounds b;
  b.max_terminal_len = 2;
  b.max_form_len = 8;
  b.max_steps = 12;
  auto res = enumerate_language(out.system, b);
  REQUIRE(res.exhausted);
  REQUIRE(res.terminals.size() == 1);
  CHECK(decode_word(res.terminals[0]) == SymString{});
}

TEST_CASE("compile_rc200: rule inventory for the template-shape grammar") {
  auto out = compile_rc200(make_xay());
  const InsDelSystem& sys = out.system;
  REQUIRE(sys.rules.size() == 2 + 18);
  CHECK(rule_by_id(sys, "p.1").base.body == symstr({"a", "Y"}));
  CHECK(rule_by_id(sys, "p.2").base.left == symstr({"Y"}));
  CHECK(rule_by_id(sys, "p.2").base.body == symstr({"X"}));
  CHECK(rule_by_id(sys, "r.1").base.body ==
        symstr({"dollar1_r", "dollar2_r"}));
  CHECK(rule_by_id(sys, "r.18").base.body == symstr({"hat_A"}));
  CHECK(size_of(sys) == SizeVector{2, 0, 0, 1, 1, 0});
  CHECK(degree_of(sys) == Degree{1, 1});
}

TEST_CASE("compile_rc200: left-linear golden simulation") {
  auto out = compile_rc200(make_xay());
  Trace t{out.system.name, symstr({"X"}), {{"p.1", 0}, {"p.2", 2}}};
  auto res = replay(out.system, t);
  REQUIRE(res.ok());
  CHECK(*res.final_form == symstr({"a", "Y"}));
  CHECK(res.forms[1] == symstr({"a", "Y", "X"}));
}

TEST_CASE("compile_rc200: split halves for ndouble symbols") {
  auto out = compile_rc200(make_g1());
  const InsDelSystem& sys = out.system;
  // p1 (S->AX) splits left-linear: 2+2; p2 (X->Za): 5; p3 (Z->SpB) splits
  // right-linear: 5+5; p4 (Sp->lambda): 1; p5 (AB->lambda): 18
  CHECK(sys.rules.size() == 4 + 5 + 10 + 1 + 18);
  CHECK(rule_by_id(sys, "p1a.1").base.body == symstr({"hat_A", "Xp_p1"}));
  CHECK(rule_by_id(sys, "p1b.1").base.body == symstr({"bar_A", "X"}));
  CHECK(rule_by_id(sys, "p3a.3").base.body == symstr({"Xp_p3", "bar_B"}));
  CHECK(rule_by_id(sys, "p3b.3").base.body == symstr({"Sp", "hat_B"}));
  CHECK(rule_by_id(sys, "p4.1").base.mode == RuleMode::deletion);
  CHECK(size_of(sys) == SizeVector{2, 0, 0, 1, 1, 0});
  CHECK(degree_of(sys) == Degree{1, 1});
}

TEST_CASE("compile_rc200: right-linear golden simulation") {
  auto out = compile_rc200(make_g1());
  Trace t{out.system.name,
          symstr({"X"}),
          {{"p2.1", 0}, {"p2.2", 2}, {"p2.3", 1}, {"p2.4", 3}, {"p2.5", 0}}};
  auto res = replay(out.system, t, /*allow_any_start=*/true);
  REQUIRE(res.ok());
  CHECK(*res.final_form == symstr({"Z", "a"}));
  CHECK(res.forms[1] == symstr({"sharp_p2", "sharpp_p2", "X"}));
  CHECK(res.forms[3] == symstr({"sharp_p2", "Z", "a", "sharpp_p2"}));
}

TEST_CASE("compile_rc200: erasing golden simulation") {
  auto out = compile_rc200(make_g1());
  SymString start = symstr({"hat_A", "bar_A", "hat_B", "bar_B"});
  Trace t{out.system.name,
          start,
          {{"p5.1", 1},
           {"p5.2", 1},
           {"p5.3", 1},
           {"p5.4", 2},
           {"p5.5", 2},
           {"p5.6", 1},
           {"p5.7", 2},
           {"p5.8", 2},
           {"p5.11", 3},
           {"p5.12", 3},
           {"p5.13", 1},
           {"p5.14", 2},
           {"p5.15", 2},
           {"p5.16", 2},
           {"p5.17", 1}}};
  auto res = replay(out.system, t, /*allow_any_start=*/true);
  REQUIRE(res.ok());
  CHECK(*res.final_form == symstr({"hat_A"}));

  Trace finish = t;
  finish.steps.push_back({"p5.18", 0});
  auto done = replay(out.system, finish, /*allow_any_start=*/true);
  REQUIRE(done.ok());
  CHECK(done.final_form->empty());
}

TEST_CASE("compile_rc200: requires compilable shapes") {
  Grammar g = make_g1();
  g.rules.push_back(make_grammar_rule("bad", {sym("X")}, symstr({"X", "a"})));
  CHECK_THROWS_AS((void)compile_rc200(g), Error);
  CHECK_THROWS_AS((void)compile_rc200(make_g2()), Error);  // wrong kind
}

TEST_CASE("cf_approximation: raw production set") {
  InsDelSystem sys;
  sys.name = "ins1";
  sys.alphabet = {sym("a")};
  sys.terminals = {sym("a")};
  sys.axioms.push_back(symstr({"a"}));
  sys.rules.push_back(
      make_rule("i", RuleMode::insertion, {}, {sym("a")}, {}));
  validate_system(sys);
  auto out = cf_approximation(sys);
  const Grammar& raw = out.before_elimination;
  REQUIRE(raw.rules.size() == 3);
  REQUIRE(raw.nonterminals.size() == 2);
  const Symbol s = raw.start;
  const Symbol g = raw.nonterminals[1];
  CHECK(raw.rules[0].lhs == SymString{s});
  CHECK(raw.rules[0].rhs == SymString{g, sym("a"), g});  // axiom production
  CHECK(raw.rules[1].lhs == SymString{g});
  CHECK(raw.rules[1].rhs == SymString{g, sym("a"), g});  // insertable a
  CHECK(raw.rules[2].rhs.empty());                       // gap -> lambda
  for (const GrammarRule& r : out.grammar.rules) CHECK(!r.rhs.empty());
}

TEST_CASE("cf_approximation: no insertions leaves the axiom language") {
  InsDelSystem sys;
  sys.name = "axonly";
  sys.alphabet = {sym("a"), sym("b")};
  sys.terminals = sys.alphabet;
  sys.axioms.push_back(symstr({"a", "b"}));
  validate_system(sys);
  auto out = cf_approximation(sys);
  SearchBounds b;
  b.max_terminal_len = 2;
  auto res = derive_grammar(out.grammar, b);
  REQUIRE(res.exhausted);
  REQUIRE(res.terminals.size() == 1);
  CHECK(res.terminals[0] == symstr({"a", "b"}));
}

TEST_CASE("cf_approximation: matches the system language at a small cap") {
  InsDelSystem sys;
  sys.name = "abfree";
  sys.alphabet = {sym("a"), sym("b")};
  sys.terminals = sys.alphabet;
  sys.axioms.push_back(symstr({"a", "b"}));
  sys.rules.push_back(make_rule("ia", RuleMode::insertion, {}, {sym("a")}, {}));
  sys.rules.push_back(make_rule("ib", RuleMode::insertion, {}, {sym("b")}, {}));
  validate_system(sys);
  auto out = cf_approximation(sys);
  SearchBounds b;
  b.max_terminal_len = 3;
  b.max_form_len = 11;
  auto system_side = enumerate_language(sys, b);
  auto grammar_side = derive_grammar(out.grammar, b);
  REQUIRE(system_side.exhausted);
  REQUIRE(grammar_side.exhausted);
  CHECK(system_side.terminals == grammar_side.terminals);
  CHECK_FALSE(system_side.terminals.empty());
}

TEST_CASE("cf_approximation: rejects systems outside the fragment") {
  InsDelSystem sys;
  sys.name = "hasdel";
  sys.alphabet = {sym("a")};
  sys.terminals = {sym("a")};
  sys.axioms.push_back(symstr({"a"}));
  sys.rules.push_back(make_rule("d", RuleMode::deletion, {}, {sym("a")}, {}));
  validate_system(sys);
  CHECK_THROWS_AS((void)cf_approximation(sys), Error);
}

TEST_CASE("generated names collide with user symbols loudly") {
  Grammar g = make_erase_only();
  g.nonterminals.push_back(sym("sharp_p"));
  // re-validate: sharp_p is now a nonterminal of the input grammar
  validate_grammar(g);
  CHECK_THROWS_AS((void)compile_sc22(g), Error);
}
