#include "insdel/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace insdel {

AlphabetMorphism AlphabetMorphism::identity_morphism() {
  AlphabetMorphism m;
  m.identity = true;
  return m;
}

AlphabetMorphism AlphabetMorphism::unhat(const InsDelSystem& sys) {
  AlphabetMorphism m;
  for (Symbol t : sys.terminals) {
    const std::string& n = t.name();
    if (n.size() > 4 && n.compare(0, 4, "hat_") == 0)
      m.map.emplace(t, Symbol::intern(n.substr(4)));
  }
  return m;
}

std::optional<Symbol> AlphabetMorphism::apply(Symbol s) const {
  if (identity) return s;
  auto it = map.find(s);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

std::optional<SymString> AlphabetMorphism::apply(const SymString& w) const {
  SymString out;
  out.reserve(w.size());
  for (Symbol s : w) {
    auto m = apply(s);
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  return out;
}

std::string show(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::subset: return "subset";
    case Verdict::superset: return "superset";
    case Verdict::incomparable: return "incomparable";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

ComparisonReport compare_languages(const InsDelSystem& sys, const Grammar& g,
                                   const AlphabetMorphism& morphism,
                                   const SearchBounds& bounds,
                                   const SearchOptions& opts) {
  if (!morphism.identity) {
    for (Symbol t : sys.terminals)
      if (!morphism.apply(t))
        throw Error("compare_languages: morphism undefined on terminal '" +
                    t.name() + "'");
    std::set<std::uint32_t> images;
    for (const auto& [from, to] : morphism.map) {
      (void)from;
      if (!images.insert(to.id()).second)
        throw Error("compare_languages: morphism is not injective");
    }
  }

  EnumerationResult sys_side = enumerate_language(sys, bounds, opts);
  EnumerationResult ora_side = derive_grammar(g, bounds, opts);

  ComparisonReport report;
  report.system_states = sys_side.states;
  report.grammar_states = ora_side.states;
  report.both_exhausted = sys_side.exhausted && ora_side.exhausted;

  std::set<SymString, bool (*)(const SymString&, const SymString&)> mapped(
      canonical_less);
  for (const SymString& w : sys_side.terminals)
    mapped.insert(*morphism.apply(w));
  report.system_terminals.assign(mapped.begin(), mapped.end());
  report.grammar_terminals = ora_side.terminals;

  std::set<SymString, bool (*)(const SymString&, const SymString&)> oracle(
      canonical_less);
  oracle.insert(ora_side.terminals.begin(), ora_side.terminals.end());
  for (const SymString& w : report.system_terminals)
    if (!oracle.count(w)) report.extra.push_back(w);
  for (const SymString& w : report.grammar_terminals)
    if (!mapped.count(w)) report.missing.push_back(w);

  const bool same = report.extra.empty() && report.missing.empty();
  if (same)
    report.verdict =
        report.both_exhausted ? Verdict::equal : Verdict::inconclusive;
  else if (!report.both_exhausted)
    report.verdict = Verdict::inconclusive;
  else if (report.extra.empty())
    report.verdict = Verdict::subset;
  else if (report.missing.empty())
    report.verdict = Verdict::superset;
  else
    report.verdict = Verdict::incomparable;
  return report;
}

std::string render_text(const ComparisonReport& r) {
  std::ostringstream os;
  os << "system language (" << r.system_terminals.size() << " strings, "
     << r.system_states << " states explored):\n";
  for (const SymString& w : r.system_terminals) os << "  " << show(w) << '\n';
  os << "grammar language (" << r.grammar_terminals.size() << " strings, "
     << r.grammar_states << " states explored):\n";
  for (const SymString& w : r.grammar_terminals) os << "  " << show(w) << '\n';
  if (!r.extra.empty()) {
    os << "system-only strings:\n";
    for (const SymString& w : r.extra) os << "  " << show(w) << '\n';
  }
  if (!r.missing.empty()) {
    os << "oracle-only strings:\n";
    for (const SymString& w : r.missing) os << "  " << show(w) << '\n';
  }
  os << "both searches exhausted: " << (r.both_exhausted ? "yes" : "no")
     << '\n';
  os << "verdict: " << show(r.verdict) << '\n';
  return os.str();
}

std::string render_machine(const ComparisonReport& r) {
  std::ostringstream os;
  os << "VERDICT " << show(r.verdict) << '\n';
  for (const SymString& w : r.extra) os << "EXTRA " << show(w) << '\n';
  for (const SymString& w : r.missing) os << "MISSING " << show(w) << '\n';
  return os.str();
}

bool GoldenReport::all_passed() const {
  for (const GoldenOutcome& c : cases)
    if (!c.passed) return false;
  return true;
}

GoldenReport check_golden_traces(const std::vector<GoldenCase>& suite) {
  GoldenReport report;
  for (const GoldenCase& c : suite) {
    GoldenOutcome out;
    out.name = c.name;
    ReplayResult res = replay(*c.system, c.trace, c.any_start);
    if (c.expect_failure) {
      if (res.ok()) {
        out.message = "expected failure, but trace replayed to " +
                      show(*res.final_form);
      } else if (res.error->step_index != c.expected_fail_step) {
        out.message = "failed at step " +
                      std::to_string(res.error->step_index) + ", expected " +
                      std::to_string(c.expected_fail_step) + " (" +
                      res.error->message + ")";
      } else {
        out.passed = true;
        out.message = "failed as expected at step " +
                      std::to_string(res.error->step_index) + " (" +
                      show(res.error->kind) + ")";
      }
    } else if (!res.ok()) {
      out.message = "replay failed at step " +
                    std::to_string(res.error->step_index) + ": " +
                    res.error->message;
    } else if (!(*res.final_form == c.expected_final)) {
      out.message = "final form " + show(*res.final_form) + ", expected " +
                    show(c.expected_final);
    } else {
      out.passed = true;
      out.message = "replayed to " + show(*res.final_form);
      for (const SymString& form : res.forms) {
        for (const SymString& bad : c.qn) {
          if (contains_subword(form, bad)) {
            out.passed = false;
            out.message = "form " + show(form) +
                          " violates the normalization condition via " +
                          show(bad);
            break;
          }
        }
        if (!out.passed) break;
      }
    }
    report.cases.push_back(std::move(out));
  }
  return report;
}

InsDelSystem make_ab_witness_system() {
  InsDelSystem sys;
  sys.name = "gamma_ab";
  const Symbol a = sym("a"), b = sym("b");
  sys.alphabet = {a, b};
  sys.terminals = {a, b};
  sys.axioms.push_back({a, b});
  sys.rules.push_back(make_rule("i1", RuleMode::insertion, {b}, {a}, {}));
  sys.rules.push_back(make_rule("i2", RuleMode::insertion, {a}, {b}, {}));
  validate_system(sys);
  return sys;
}

bool in_ab_plus(const SymString& w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  const Symbol a = sym("a"), b = sym("b");
  for (std::size_t i = 0; i < w.size(); i += 2)
    if (!(w[i] == a && w[i + 1] == b)) return false;
  return true;
}

}  // namespace insdel
