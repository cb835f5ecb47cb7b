// grammar.hpp -- conditional context-free grammars, the special Geffert
// normal form validator, right-hand-side normalization, lambda elimination
// and the brute-force derivation oracle.
#pragma once

#include "insdel/core.hpp"
#include "insdel/engine.hpp"

namespace insdel {

enum class GrammarKind { cf, rc, sc, sgnf };
std::string show(GrammarKind k);

struct GrammarRule {
  std::string id;
  SymString lhs;  // single nonterminal for cf/rc/sc; the sgnf erasing rules
                  // AB -> lambda and CD -> lambda have a two-symbol lhs
  SymString rhs;
  std::vector<SymString> permit;  // E; kept sorted and deduplicated
  std::vector<SymString> forbid;  // F
  void canonicalize();
  friend bool operator==(const GrammarRule&, const GrammarRule&) = default;
};

GrammarRule make_grammar_rule(std::string id, SymString lhs, SymString rhs,
                              std::vector<SymString> permit = {},
                              std::vector<SymString> forbid = {});

struct Grammar {
  std::string name;
  GrammarKind kind = GrammarKind::cf;
  std::vector<Symbol> nonterminals;  // unique, declaration order
  std::vector<Symbol> terminals;
  Symbol start;
  std::vector<GrammarRule> rules;
  // sgnf only: N = nprime ∪ ndouble, ndouble has exactly four symbols whose
  // (1st,2nd) and (3rd,4th) form the erasing pairs; sprime is the declared
  // erasing nonterminal.
  std::vector<Symbol> nprime;
  std::vector<Symbol> ndouble;
  Symbol sprime;
  std::string comment;  // free-form note; rendered as a header comment and
                        // deliberately excluded from equality
  friend bool operator==(const Grammar& a, const Grammar& b) {
    return a.name == b.name && a.kind == b.kind &&
           a.nonterminals == b.nonterminals && a.terminals == b.terminals &&
           a.start == b.start && a.rules == b.rules && a.nprime == b.nprime &&
           a.ndouble == b.ndouble && a.sprime == b.sprime;
  }
};

// Throws Error on the first structural violation (kind-specific shape and
// condition checks included).
void validate_grammar(const Grammar& g);

struct SgnfViolation {
  std::string rule_id;
  std::string reason;
  friend bool operator==(const SgnfViolation&, const SgnfViolation&) = default;
};

struct SgnfReport {
  bool valid = true;
  std::vector<SgnfViolation> violations;
};

// Checks every rule against the five special Geffert normal form shapes and
// right-hand-side uniqueness of the linear rules (rhs starting with the
// start symbol or the declared erasing nonterminal are exempt).
SgnfReport validate_sgnf(const Grammar& g);

// Rewrites every rc rule to |rhs| in {0, 2} by chaining fresh W symbols; the
// replaced rule's head inherits its conditions plus the W-symbol forbid set.
Grammar normalize_rc_rhs(const Grammar& g);

// Standard nullable-closure elimination of empty productions (cf only).
// The output generates the same non-empty strings.
Grammar eliminate_lambda(const Grammar& g);

// One-step successors: rules whose conditions hold on the whole form,
// applied at every occurrence of their left-hand side.
std::vector<StepTriple> grammar_successors(const Grammar& g,
                                           const SymString& w);

// Bounded BFS over sentential forms from the start symbol; the oracle for
// all compiler checks.
EnumerationResult derive_grammar(const Grammar& g, const SearchBounds& bounds,
                                 const SearchOptions& opts = {});

}  // namespace insdel
