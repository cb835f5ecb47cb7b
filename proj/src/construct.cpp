#include "insdel/construct.hpp"

#include <algorithm>
#include <unordered_set>

namespace insdel {

namespace {

constexpr std::string_view kHatPrefix = "hat_";
constexpr std::string_view kBarPrefix = "bar_";

std::vector<Symbol> sorted_by_name(std::vector<Symbol> syms) {
  std::sort(syms.begin(), syms.end(), symbol_name_less);
  return syms;
}

std::vector<SymString> singles(const std::vector<Symbol>& syms) {
  std::vector<SymString> out;
  out.reserve(syms.size());
  for (Symbol s : syms) out.push_back({s});
  return out;
}

// set difference as singleton words, for forbid lists
std::vector<SymString> singles_except(const std::vector<Symbol>& syms,
                                      std::initializer_list<Symbol> except) {
  std::vector<SymString> out;
  for (Symbol s : syms) {
    bool skip = false;
    for (Symbol e : except)
      if (s == e) skip = true;
    if (!skip) out.push_back({s});
  }
  return out;
}

std::vector<SymString> concat(std::vector<SymString> a,
                              const std::vector<SymString>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_collisions(const std::vector<Symbol>& generated,
                      const std::vector<Symbol>& input,
                      const std::string& who) {
  std::unordered_set<std::uint32_t> in;
  for (Symbol s : input) in.insert(s.id());
  for (Symbol s : generated)
    if (in.count(s.id()))
      throw Error(who + ": generated symbol '" + s.name() +
                  "' collides with an input symbol");
}

}  // namespace

Symbol hat_symbol(Symbol s) {
  return Symbol::intern(std::string(kHatPrefix) + s.name());
}

Symbol bar_symbol(Symbol s) {
  return Symbol::intern(std::string(kBarPrefix) + s.name());
}

std::vector<SymString> normalization_condition(const std::vector<Symbol>& v,
                                               Symbol b, Symbol e) {
  auto base = sorted_by_name(v);
  std::vector<SymString> qn;
  qn.reserve(2 * base.size() * base.size() + 6 * base.size());
  for (Symbol x : base)
    for (Symbol y : base) qn.push_back({hat_symbol(x), hat_symbol(y)});
  for (Symbol x : base)
    for (Symbol y : base) qn.push_back({bar_symbol(x), bar_symbol(y)});
  for (Symbol x : base) qn.push_back({b, bar_symbol(x)});
  for (Symbol x : base) qn.push_back({hat_symbol(x), e});
  for (Symbol x : base) {
    qn.push_back({hat_symbol(x), b});
    qn.push_back({bar_symbol(x), b});
  }
  for (Symbol x : base) {
    qn.push_back({e, hat_symbol(x)});
    qn.push_back({e, bar_symbol(x)});
  }
  return qn;
}

std::vector<SymString> normalization_condition(const std::vector<Symbol>& v) {
  return normalization_condition(v, sym("B"), sym("E"));
}

SymString encode_word(const SymString& w, Symbol b, Symbol e) {
  SymString out;
  out.reserve(2 * w.size() + 2);
  out.push_back(b);
  for (Symbol s : w) {
    out.push_back(hat_symbol(s));
    out.push_back(bar_symbol(s));
  }
  out.push_back(e);
  return out;
}

SymString encode_word(const SymString& w) {
  return encode_word(w, sym("B"), sym("E"));
}

SymString decode_word(const SymString& w) {
  SymString out;
  out.reserve(w.size());
  for (Symbol s : w) {
    const std::string& n = s.name();
    if (n.size() <= kHatPrefix.size() || n.compare(0, kHatPrefix.size(),
                                                   kHatPrefix) != 0)
      throw Error("decode_word: '" + n + "' is not a hatted symbol");
    out.push_back(Symbol::intern(n.substr(kHatPrefix.size())));
  }
  return out;
}

Sc22Output compile_sc22(const Grammar& g) {
  if (g.kind != GrammarKind::rc)
    throw Error("compile_sc22: grammar '" + g.name + "' has kind " +
                show(g.kind));
  Sc22Output out;
  out.normalized = normalize_rc_rhs(g);
  const Grammar& norm = out.normalized;

  std::vector<Symbol> base = norm.nonterminals;
  base.insert(base.end(), norm.terminals.begin(), norm.terminals.end());
  base = sorted_by_name(base);
  out.base = base;
  out.b = sym("Bmark");
  out.e = sym("Emark");

  // marker families, in rule order
  for (const GrammarRule& r : norm.rules) {
    if (r.rhs.empty())
      out.sharp_family.push_back(sym("sharp_" + r.id));
    else
      for (int i = 1; i <= 5; ++i)
        out.dollar_family.push_back(
            sym("dollar" + std::to_string(i) + "_" + r.id));
  }

  std::vector<Symbol> generated{out.b, out.e};
  for (Symbol s : base) {
    generated.push_back(hat_symbol(s));
    generated.push_back(bar_symbol(s));
  }
  generated.insert(generated.end(), out.sharp_family.begin(),
                   out.sharp_family.end());
  generated.insert(generated.end(), out.dollar_family.begin(),
                   out.dollar_family.end());
  check_collisions(generated, base, "compile_sc22");

  out.qn = normalization_condition(base, out.b, out.e);
  const auto& qn = out.qn;
  auto q_sharp = singles(out.sharp_family);
  auto q_dollar = singles(out.dollar_family);

  // original rc conditions are single symbols; occurrence of a in a coded
  // string is checked through the pair hat_a bar_a
  auto code_conditions = [&](const std::vector<SymString>& words) {
    std::vector<SymString> coded;
    for (const SymString& w : words)
      coded.push_back({hat_symbol(w[0]), bar_symbol(w[0])});
    return coded;
  };

  InsDelSystem& sys = out.system;
  sys.name = g.name + "_sc22";
  for (Symbol s : base) {
    sys.alphabet.push_back(hat_symbol(s));
    sys.alphabet.push_back(bar_symbol(s));
  }
  sys.alphabet.push_back(out.b);
  sys.alphabet.push_back(out.e);
  sys.alphabet.insert(sys.alphabet.end(), out.sharp_family.begin(),
                      out.sharp_family.end());
  sys.alphabet.insert(sys.alphabet.end(), out.dollar_family.begin(),
                      out.dollar_family.end());
  for (Symbol t : sorted_by_name(norm.terminals))
    sys.terminals.push_back(hat_symbol(t));
  sys.axioms.push_back(encode_word({norm.start}, out.b, out.e));

  auto ins = [](std::string id, Symbol s, std::vector<SymString> permit,
                std::vector<SymString> forbid) {
    return make_rule(std::move(id), RuleMode::insertion, {}, {s}, {},
                     std::move(permit), std::move(forbid));
  };
  auto del = [](std::string id, Symbol s, std::vector<SymString> permit,
                std::vector<SymString> forbid) {
    return make_rule(std::move(id), RuleMode::deletion, {}, {s}, {},
                     std::move(permit), std::move(forbid));
  };

  std::size_t sharp_at = 0, dollar_at = 0;
  for (const GrammarRule& r : norm.rules) {
    const Symbol x_hat = hat_symbol(r.lhs[0]);
    const Symbol x_bar = bar_symbol(r.lhs[0]);
    const SymString xx{x_hat, x_bar};
    auto permit_cond = code_conditions(r.permit);
    auto forbid_cond = code_conditions(r.forbid);
    if (r.rhs.empty()) {
      const Symbol sharp = out.sharp_family[sharp_at++];
      sys.rules.push_back(ins(r.id + ".1", sharp,
                              concat({xx}, permit_cond),
                              concat(concat(concat(q_sharp, q_dollar),
                                            forbid_cond),
                                     qn)));
      sys.rules.push_back(del(r.id + ".2", x_hat, {{sharp, x_hat}}, qn));
      sys.rules.push_back(del(r.id + ".3", x_bar, {{sharp, x_bar}},
                              concat({{x_hat, sharp}}, qn)));
      sys.rules.push_back(del(r.id + ".4", sharp, {}, qn));
    } else {
      const Symbol y_hat = hat_symbol(r.rhs[0]);
      const Symbol y_bar = bar_symbol(r.rhs[0]);
      const Symbol z_hat = hat_symbol(r.rhs[1]);
      const Symbol z_bar = bar_symbol(r.rhs[1]);
      const Symbol d1 = out.dollar_family[dollar_at++];
      const Symbol d2 = out.dollar_family[dollar_at++];
      const Symbol d3 = out.dollar_family[dollar_at++];
      const Symbol d4 = out.dollar_family[dollar_at++];
      const Symbol d5 = out.dollar_family[dollar_at++];
      sys.rules.push_back(ins(r.id + ".1", d1, concat({xx}, permit_cond),
                              concat(concat(concat(q_sharp, q_dollar),
                                            forbid_cond),
                                     qn)));
      sys.rules.push_back(ins(r.id + ".2", d2, {{d1, x_hat}},
                              concat({{d2}}, qn)));
      sys.rules.push_back(del(r.id + ".3", x_hat,
                              {{d1, x_hat}, {x_bar, d2}}, qn));
      sys.rules.push_back(ins(r.id + ".4", d3, {{d1, x_bar}},
                              concat({{d2, x_bar}, {d3}, {x_hat, d1}}, qn)));
      sys.rules.push_back(del(r.id + ".5", d1, {{d3, d1}}, qn));
      sys.rules.push_back(del(r.id + ".6", x_bar, {{d3, x_bar}},
                              concat({{d1}}, qn)));
      sys.rules.push_back(ins(r.id + ".7", d4, {{d3, d2}},
                              concat({{d1}, {d4}}, qn)));
      sys.rules.push_back(del(r.id + ".8", d2, {{d4, d3}}, qn));
      sys.rules.push_back(ins(r.id + ".9", d5, {{d4}},
                              concat({{d2}, {d5}, {x_hat, d4}}, qn)));
      sys.rules.push_back(ins(r.id + ".10", y_hat, {{d4, d3}, {d3, d5}},
                              concat({{y_hat, d4}}, qn)));
      sys.rules.push_back(ins(r.id + ".11", y_bar,
                              {{d4, y_hat}, {y_hat, d3}, {d3, d5}},
                              concat({{d5, y_bar}}, qn)));
      sys.rules.push_back(ins(r.id + ".12", z_hat,
                              {{d4, y_hat}, {y_bar, d3}, {d3, d5}},
                              concat({{z_hat, d4}}, qn)));
      sys.rules.push_back(ins(r.id + ".13", z_bar,
                              {{d4, y_hat}, {y_bar, d3}, {d3, z_hat}, {z_hat, d5}},
                              concat({{d5, z_bar}}, qn)));
      sys.rules.push_back(del(r.id + ".14", d3,
                              {{d4, y_hat}, {y_bar, d3}, {d3, z_hat}, {z_bar, d5}},
                              qn));
      sys.rules.push_back(del(r.id + ".15", d4, {{d4, y_hat}, {z_bar, d5}},
                              concat({{d3}}, qn)));
      sys.rules.push_back(del(r.id + ".16", d5, {},
                              concat({{d3}, {d4}}, qn)));
    }
  }

  // cleanup group: erase the terminators, then the barred terminals, once
  // nothing but coded terminal pairs is left
  std::vector<SymString> keep;
  {
    std::unordered_set<std::uint32_t> ok{out.b.id(), out.e.id()};
    for (Symbol t : norm.terminals) {
      ok.insert(hat_symbol(t).id());
      ok.insert(bar_symbol(t).id());
    }
    for (Symbol s : sys.alphabet)
      if (!ok.count(s.id())) keep.push_back({s});
  }
  sys.rules.push_back(del("clean.B", out.b, {}, keep));
  sys.rules.push_back(del("clean.E", out.e, {}, {{out.b}}));
  for (Symbol t : sorted_by_name(norm.terminals))
    sys.rules.push_back(del("clean." + t.name(), bar_symbol(t), {},
                            {{out.b}, {out.e}}));

  validate_system(sys);
  return out;
}

namespace {

enum class RcShape {
  left_linear_t,   // X -> cY, c terminal
  left_linear_n,   // X -> bY, b in ndouble
  right_linear_t,  // X -> Yc, c terminal
  right_linear_n,  // X -> Yb, b in ndouble
  sprime_erase,    // S' -> lambda
  pair_erase,      // AB -> lambda / CD -> lambda
};

struct RcClassified {
  const GrammarRule* rule;
  RcShape shape;
};

std::vector<RcClassified> classify_rc200(const Grammar& g) {
  auto in = [](const std::vector<Symbol>& v, Symbol s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  std::vector<RcClassified> out;
  for (const GrammarRule& r : g.rules) {
    if (r.lhs.size() == 2) {
      bool ab = r.lhs[0] == g.ndouble[0] && r.lhs[1] == g.ndouble[1];
      bool cd = r.lhs[0] == g.ndouble[2] && r.lhs[1] == g.ndouble[3];
      if (!(ab || cd) || !r.rhs.empty())
        throw Error("compile_rc200: rule '" + r.id +
                    "' is not a compilable erasing rule");
      out.push_back({&r, RcShape::pair_erase});
      continue;
    }
    const Symbol x = r.lhs[0];
    if (r.rhs.empty()) {
      if (!(x == g.sprime))
        throw Error("compile_rc200: rule '" + r.id +
                    "' erases a symbol other than the declared sprime");
      out.push_back({&r, RcShape::sprime_erase});
      continue;
    }
    if (r.rhs.size() != 2 || !in(g.nprime, x))
      throw Error("compile_rc200: rule '" + r.id + "' matches no template");
    const Symbol first = r.rhs[0], second = r.rhs[1];
    if (in(g.nprime, second) && !(second == x)) {
      if (in(g.ndouble, first)) {
        out.push_back({&r, RcShape::left_linear_n});
        continue;
      }
      if (in(g.terminals, first)) {
        out.push_back({&r, RcShape::left_linear_t});
        continue;
      }
    }
    if (in(g.nprime, first) && !(first == x)) {
      if (in(g.ndouble, second)) {
        out.push_back({&r, RcShape::right_linear_n});
        continue;
      }
      if (in(g.terminals, second)) {
        out.push_back({&r, RcShape::right_linear_t});
        continue;
      }
    }
    throw Error("compile_rc200: rule '" + r.id + "' matches no template");
  }
  return out;
}

}  // namespace

Rc200Output compile_rc200(const Grammar& g) {
  if (g.kind != GrammarKind::sgnf)
    throw Error("compile_rc200: grammar '" + g.name + "' has kind " +
                show(g.kind));
  validate_grammar(g);
  auto classified = classify_rc200(g);

  Rc200Output out;
  for (Symbol s : g.ndouble) {
    out.hat.emplace(s, hat_symbol(s));
    out.bar.emplace(s, bar_symbol(s));
  }

  // per-rule markers, in rule order
  struct PerRule {
    Symbol xp;                  // split intermediate
    Symbol sharp[2], sharpp[2]; // direct template / per split half
    Symbol dollar[5], f, fp;
  };
  std::unordered_map<std::string, PerRule> marks;
  for (const RcClassified& c : classified) {
    const std::string& id = c.rule->id;
    PerRule m;
    switch (c.shape) {
      case RcShape::left_linear_t:
      case RcShape::sprime_erase:
        break;
      case RcShape::left_linear_n:
        m.xp = sym("Xp_" + id);
        out.markers.push_back(m.xp);
        break;
      case RcShape::right_linear_t:
        m.sharp[0] = sym("sharp_" + id);
        m.sharpp[0] = sym("sharpp_" + id);
        out.markers.push_back(m.sharp[0]);
        out.markers.push_back(m.sharpp[0]);
        break;
      case RcShape::right_linear_n:
        m.xp = sym("Xp_" + id);
        out.markers.push_back(m.xp);
        for (int h = 0; h < 2; ++h) {
          const char* suffix = h == 0 ? "a" : "b";
          m.sharp[h] = sym("sharp_" + id + suffix);
          m.sharpp[h] = sym("sharpp_" + id + suffix);
          out.markers.push_back(m.sharp[h]);
          out.markers.push_back(m.sharpp[h]);
        }
        break;
      case RcShape::pair_erase:
        for (int i = 0; i < 5; ++i) {
          m.dollar[i] = sym("dollar" + std::to_string(i + 1) + "_" + id);
          out.markers.push_back(m.dollar[i]);
        }
        m.f = sym("f_" + id);
        m.fp = sym("fp_" + id);
        out.markers.push_back(m.f);
        out.markers.push_back(m.fp);
        break;
    }
    marks.emplace(id, m);
  }

  std::vector<Symbol> input = g.nonterminals;
  input.insert(input.end(), g.terminals.begin(), g.terminals.end());
  std::vector<Symbol> generated = out.markers;
  for (Symbol s : g.ndouble) {
    generated.push_back(out.hat.at(s));
    generated.push_back(out.bar.at(s));
  }
  check_collisions(generated, input, "compile_rc200");

  out.gate = g.nprime;
  out.gate.insert(out.gate.end(), out.markers.begin(), out.markers.end());

  InsDelSystem& sys = out.system;
  sys.name = g.name + "_rc200";
  sys.alphabet = input;
  for (Symbol s : g.ndouble) {
    sys.alphabet.push_back(out.hat.at(s));
    sys.alphabet.push_back(out.bar.at(s));
  }
  sys.alphabet.insert(sys.alphabet.end(), out.markers.begin(),
                      out.markers.end());
  sys.terminals = g.terminals;
  sys.axioms.push_back({g.start});

  // X -> cY as two rules: insert cY gated on a lone X, delete X behind Y
  auto emit_p = [&](const std::string& label, Symbol x, Symbol c, Symbol y) {
    sys.rules.push_back(make_rule(label + ".1", RuleMode::insertion, {},
                                  {c, y}, {}, {{x}},
                                  singles_except(out.gate, {x})));
    sys.rules.push_back(
        make_rule(label + ".2", RuleMode::deletion, {y}, {x}, {}));
  };
  // X -> Yc in five rules: a sharp pair fixes the site, Yc lands between
  auto emit_q = [&](const std::string& label, Symbol sharp, Symbol sharpp,
                    Symbol x, Symbol y, Symbol c) {
    sys.rules.push_back(make_rule(label + ".1", RuleMode::insertion, {},
                                  {sharp, sharpp}, {}, {{x}},
                                  singles_except(out.gate, {x})));
    sys.rules.push_back(
        make_rule(label + ".2", RuleMode::deletion, {sharpp}, {x}, {}));
    sys.rules.push_back(make_rule(label + ".3", RuleMode::insertion, {},
                                  {y, c}, {}, {{sharp}}, {{x}, {y}}));
    sys.rules.push_back(
        make_rule(label + ".4", RuleMode::deletion, {c}, {sharpp}, {}));
    sys.rules.push_back(make_rule(label + ".5", RuleMode::deletion, {},
                                  {sharp}, {}, {}, {{sharpp}}));
  };

  const Symbol hat_a = out.hat.at(g.ndouble[0]);
  const Symbol hat_c = out.hat.at(g.ndouble[2]);
  std::vector<SymString> r18_forbid;
  {
    std::unordered_set<std::uint32_t> ok{hat_a.id(), hat_c.id()};
    for (Symbol t : g.terminals) ok.insert(t.id());
    for (Symbol s : sys.alphabet)
      if (!ok.count(s.id())) r18_forbid.push_back({s});
  }

  for (const RcClassified& c : classified) {
    const GrammarRule& r = *c.rule;
    const PerRule& m = marks.at(r.id);
    switch (c.shape) {
      case RcShape::left_linear_t:
        emit_p(r.id, r.lhs[0], r.rhs[0], r.rhs[1]);
        break;
      case RcShape::left_linear_n:
        // X -> bY via X -> hat_b X', X' -> bar_b Y
        emit_p(r.id + "a", r.lhs[0], out.hat.at(r.rhs[0]), m.xp);
        emit_p(r.id + "b", m.xp, out.bar.at(r.rhs[0]), r.rhs[1]);
        break;
      case RcShape::right_linear_t:
        emit_q(r.id, m.sharp[0], m.sharpp[0], r.lhs[0], r.rhs[0], r.rhs[1]);
        break;
      case RcShape::right_linear_n:
        // X -> Yb via X -> X' bar_b, X' -> Y hat_b
        emit_q(r.id + "a", m.sharp[0], m.sharpp[0], r.lhs[0], m.xp,
               out.bar.at(r.rhs[1]));
        emit_q(r.id + "b", m.sharp[1], m.sharpp[1], m.xp, r.rhs[0],
               out.hat.at(r.rhs[1]));
        break;
      case RcShape::sprime_erase:
        sys.rules.push_back(make_rule(r.id + ".1", RuleMode::deletion, {},
                                      {g.sprime}, {}, {},
                                      singles_except(out.gate, {g.sprime})));
        break;
      case RcShape::pair_erase: {
        const Symbol u_hat = out.hat.at(r.lhs[0]);
        const Symbol u_bar = out.bar.at(r.lhs[0]);
        const Symbol v_hat = out.hat.at(r.lhs[1]);
        const Symbol v_bar = out.bar.at(r.lhs[1]);
        const Symbol d1 = m.dollar[0], d2 = m.dollar[1], d3 = m.dollar[2],
                     d4 = m.dollar[3], d5 = m.dollar[4];
        auto& rs = sys.rules;
        rs.push_back(make_rule(r.id + ".1", RuleMode::insertion, {}, {d1, d2},
                               {}, {}, singles(out.markers)));
        rs.push_back(make_rule(r.id + ".2", RuleMode::deletion, {u_hat}, {d1}, {}));
        rs.push_back(make_rule(r.id + ".3", RuleMode::insertion, {}, {d3}, {},
                               {{d2}}, {{d1}, {d3}, {d4}}));
        rs.push_back(make_rule(r.id + ".4", RuleMode::deletion, {d3}, {d2}, {}));
        rs.push_back(make_rule(r.id + ".5", RuleMode::deletion, {d3}, {u_bar},
                               {}, {}, {{d2}}));
        rs.push_back(make_rule(r.id + ".6", RuleMode::insertion, {}, {d4}, {},
                               {{d3}}, {{d2}, {d4}}));
        rs.push_back(make_rule(r.id + ".7", RuleMode::deletion, {d4}, {d3}, {}));
        rs.push_back(make_rule(r.id + ".8", RuleMode::deletion, {d4}, {v_hat},
                               {}, {}, {{d3}}));
        rs.push_back(make_rule(r.id + ".9", RuleMode::deletion, {d4}, {hat_a},
                               {}, {}, {{d3}}));
        rs.push_back(make_rule(r.id + ".10", RuleMode::deletion, {d4}, {hat_c},
                               {}, {}, {{d3}}));
        rs.push_back(make_rule(r.id + ".11", RuleMode::insertion, {},
                               {m.f, m.fp}, {}, {{d4}}, {{d3}, {m.fp}}));
        rs.push_back(make_rule(r.id + ".12", RuleMode::deletion, {v_bar},
                               {m.f}, {}));
        rs.push_back(make_rule(r.id + ".13", RuleMode::insertion, {}, {d5}, {},
                               {{m.fp}}, {{m.f}, {d5}}));
        rs.push_back(make_rule(r.id + ".14", RuleMode::deletion, {d5}, {d4}, {}));
        rs.push_back(make_rule(r.id + ".15", RuleMode::deletion, {d5}, {v_bar},
                               {}, {}, {{d4}}));
        rs.push_back(make_rule(r.id + ".16", RuleMode::deletion, {d5}, {m.fp},
                               {}, {}, {{d4}}));
        rs.push_back(make_rule(r.id + ".17", RuleMode::deletion, {}, {d5}, {},
                               {}, {{m.fp}}));
        rs.push_back(make_rule(r.id + ".18", RuleMode::deletion, {}, {u_hat},
                               {}, {}, r18_forbid));
        break;
      }
    }
  }

  validate_system(sys);
  return out;
}

CfApproxOutput cf_approximation(const InsDelSystem& sys) {
  validate_system(sys);
  std::unordered_set<std::uint32_t> terminal_ids;
  for (Symbol t : sys.terminals) terminal_ids.insert(t.id());
  std::vector<Symbol> insertable;
  bool conditioned = false;
  for (const ConditionedRule& r : sys.rules) {
    if (r.base.mode != RuleMode::insertion)
      throw Error("cf_approximation: system '" + sys.name +
                  "' has deletion rule '" + r.id + "'");
    if (!r.base.left.empty() || !r.base.right.empty())
      throw Error("cf_approximation: rule '" + r.id + "' has contexts");
    if (r.base.body.size() != 1)
      throw Error("cf_approximation: rule '" + r.id +
                  "' inserts more than one symbol");
    conditioned = conditioned || !r.permit.empty() || !r.forbid.empty();
    if (terminal_ids.count(r.base.body[0].id()))
      insertable.push_back(r.base.body[0]);
  }
  for (const SymString& a : sys.axioms)
    for (Symbol s : a)
      if (!terminal_ids.count(s.id()))
        throw Error("cf_approximation: axiom symbol '" + s.name() +
                    "' is not terminal");
  insertable = sorted_by_name(insertable);
  insertable.erase(std::unique(insertable.begin(), insertable.end()),
                   insertable.end());

  auto fresh = [&](std::string name) {
    while (terminal_ids.count(sym(name).id())) name += "0";
    return sym(name);
  };
  const Symbol start = fresh("S");
  // gap nonterminal: one per axiom gap, generating the insertable closure.
  // Folding it into the start symbol would let insertion productions derive
  // strings that never consume an axiom.
  const Symbol gap = fresh("G");

  Grammar raw;
  raw.name = sys.name + "_cf";
  raw.kind = GrammarKind::cf;
  raw.nonterminals = {start, gap};
  raw.terminals = sys.terminals;
  raw.start = start;
  if (conditioned)
    raw.comment =
        "rule conditions ignored: unconditioned over-approximation";
  std::size_t k = 0;
  for (const SymString& a : sys.axioms) {
    SymString rhs{gap};
    for (Symbol s : a) {
      rhs.push_back(s);
      rhs.push_back(gap);
    }
    raw.rules.push_back(
        make_grammar_rule("ax" + std::to_string(++k), {start}, rhs));
  }
  for (Symbol a : insertable)
    raw.rules.push_back(
        make_grammar_rule("ins_" + a.name(), {gap}, {gap, a, gap}));
  raw.rules.push_back(make_grammar_rule("eps", {gap}, {}));
  validate_grammar(raw);

  CfApproxOutput out;
  out.before_elimination = raw;
  out.grammar = eliminate_lambda(raw);
  return out;
}

}  // namespace insdel
