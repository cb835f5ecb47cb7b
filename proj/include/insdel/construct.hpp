// construct.hpp -- compilers from conditional grammars to insertion-deletion
// systems, plus the shared pair-coding and normalization-condition helpers.
#pragma once

#include <unordered_map>

#include "insdel/core.hpp"
#include "insdel/grammar.hpp"

namespace insdel {

// Coded alias of a base symbol: hat_<name> / bar_<name>.
Symbol hat_symbol(Symbol s);
Symbol bar_symbol(Symbol s);

// Forbidding-word set whose avoidance keeps a string close to the shape
// B (hat bar)+ E: same-decoration adjacencies, a bar right after the left
// terminator, a hat right before the right terminator, and any coded symbol
// touching a terminator from the outside.
std::vector<SymString> normalization_condition(const std::vector<Symbol>& v,
                                               Symbol b, Symbol e);
std::vector<SymString> normalization_condition(const std::vector<Symbol>& v);

// B . (hat_a bar_a per letter) . E
SymString encode_word(const SymString& w, Symbol b, Symbol e);
SymString encode_word(const SymString& w);

// Letterwise unhat; throws on a symbol without the hat_ prefix.
SymString decode_word(const SymString& w);

// Artifacts of the degree-(2,2) compilation of a random context grammar
// into single-symbol context-free insertions and deletions.
struct Sc22Output {
  InsDelSystem system;
  Grammar normalized;        // input after normalize_rc_rhs
  std::vector<Symbol> base;  // coded base alphabet, sorted by name
  Symbol b, e;               // terminators
  std::vector<SymString> qn;
  std::vector<Symbol> sharp_family;   // one marker per erasing rule
  std::vector<Symbol> dollar_family;  // five markers per binary rule
};
Sc22Output compile_sc22(const Grammar& g);

// Artifacts of the random-context compilation of a special Geffert normal
// form grammar into two-symbol insertions and left-context deletions.
struct Rc200Output {
  InsDelSystem system;
  std::unordered_map<Symbol, Symbol, SymbolHash> hat, bar;  // ndouble codings
  std::vector<Symbol> markers;  // per-rule interlock symbols (sharp, dollar,
                                // f families and split intermediates)
  std::vector<Symbol> gate;     // nprime ∪ markers; the start-of-simulation
                                // forbid class
};
Rc200Output compile_rc200(const Grammar& g);

struct CfApproxOutput {
  Grammar grammar;             // after lambda elimination
  Grammar before_elimination;  // the raw production set
};

// Context-free grammar generating the language of a system with only
// context-free single-symbol insertions: per-axiom productions whose gaps
// derive the insertable closure. Rule conditions are ignored, so for
// conditioned systems this is an over-approximation.
CfApproxOutput cf_approximation(const InsDelSystem& sys);

}  // namespace insdel
