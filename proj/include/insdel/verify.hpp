// verify.hpp -- cross-checking harness: bounded language comparison under
// alphabet morphisms, golden derivation traces, and the insertion-pumping
// counterexample fixture.
#pragma once

#include <unordered_map>

#include "insdel/core.hpp"
#include "insdel/engine.hpp"
#include "insdel/grammar.hpp"

namespace insdel {

// Partial symbol renaming, applied letterwise to terminal strings. Must be
// total on the compared system's terminal alphabet and injective.
struct AlphabetMorphism {
  bool identity = false;
  std::unordered_map<Symbol, Symbol, SymbolHash> map;

  static AlphabetMorphism identity_morphism();
  // hat_X -> X for every system terminal carrying the hat_ prefix.
  static AlphabetMorphism unhat(const InsDelSystem& sys);

  std::optional<Symbol> apply(Symbol s) const;
  std::optional<SymString> apply(const SymString& w) const;
};

enum class Verdict { equal, subset, superset, incomparable, inconclusive };
std::string show(Verdict v);

struct ComparisonReport {
  std::vector<SymString> system_terminals;   // after the morphism, sorted
  std::vector<SymString> grammar_terminals;  // oracle language, sorted
  std::vector<SymString> missing;            // oracle-only strings
  std::vector<SymString> extra;              // system-only strings
  bool both_exhausted = false;
  Verdict verdict = Verdict::inconclusive;
  std::size_t system_states = 0;
  std::size_t grammar_states = 0;
};

// Compares morphism(L(sys)) with the grammar oracle at the shared bounds.
// equal is claimed only when both searches exhausted.
ComparisonReport compare_languages(const InsDelSystem& sys, const Grammar& g,
                                   const AlphabetMorphism& morphism,
                                   const SearchBounds& bounds,
                                   const SearchOptions& opts = {});

std::string render_text(const ComparisonReport& report);
// Line-oriented: VERDICT <v>, then EXTRA <word> / MISSING <word> lines.
std::string render_machine(const ComparisonReport& report);

struct GoldenCase {
  std::string name;
  const InsDelSystem* system = nullptr;
  Trace trace;
  SymString expected_final;
  bool any_start = false;
  bool expect_failure = false;
  std::size_t expected_fail_step = 0;
  // When non-empty, every form along the replay must avoid these subwords.
  std::vector<SymString> qn;
};

struct GoldenOutcome {
  std::string name;
  bool passed = false;
  std::string message;
};

struct GoldenReport {
  std::vector<GoldenOutcome> cases;
  bool all_passed() const;
};

GoldenReport check_golden_traces(const std::vector<GoldenCase>& suite);

// Hand-built witness for the pumping argument: axiom ab, insert a after b,
// insert b after a. Size (1,1,0;0,0,0).
InsDelSystem make_ab_witness_system();

// Direct (ab)+ membership; deliberately independent of the engine.
bool in_ab_plus(const SymString& w);

}  // namespace insdel
