// core.hpp -- value types for conditional insertion-deletion systems and
// the single-step derivation relation.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace insdel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interned token. Equality and hashing use the id; a global table owns the
// names. Names may not contain whitespace or any of `[ ] { } ( ) #`.
class Symbol {
 public:
  Symbol() : id_(0) {}  // sentinel; never a member of a valid alphabet
  static Symbol intern(std::string_view name);
  static bool valid_name(std::string_view name);
  const std::string& name() const;
  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != 0; }
  friend bool operator==(Symbol, Symbol) = default;
  // id order: arbitrary but stable within a run; container use only.
  // Rendered output is ordered by name via canonical_less.
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

struct SymbolHash {
  std::size_t operator()(Symbol s) const {
    return static_cast<std::size_t>(s.id()) * 0x9e3779b97f4a7c15ull;
  }
};

// A finite string of symbols; the empty vector is the empty string.
using SymString = std::vector<Symbol>;

Symbol sym(std::string_view name);
SymString symstr(std::initializer_list<std::string_view> names);

std::string show(const SymString& w);  // "[a b]", "[]" for the empty string
bool symbol_name_less(Symbol a, Symbol b);
// Ordering by (length, then symbol names); used for all rendered output.
bool canonical_less(const SymString& a, const SymString& b);
bool contains_subword(const SymString& w, const SymString& x);
std::size_t count_occurrences(const SymString& w, Symbol a);

struct SymStringHash {
  std::size_t operator()(const SymString& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Symbol s : w) {
      h ^= s.id();
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Per-form lookup index: one- and two-symbol condition words resolve by
// binary search instead of rescanning the form for every rule.
class FormIndex {
 public:
  explicit FormIndex(const SymString& w);
  bool contains(const SymString& word) const;

 private:
  const SymString* form_;
  std::vector<std::uint32_t> singles_;
  std::vector<std::uint64_t> pairs_;
};

enum class RuleMode { insertion, deletion };

// (u, alpha, v): insertion rewrites uv -> u alpha v, deletion the reverse.
struct ContextRule {
  RuleMode mode = RuleMode::insertion;
  SymString left;
  SymString body;  // alpha, never empty
  SymString right;
  friend bool operator==(const ContextRule&, const ContextRule&) = default;
};

// A context rule gated by permitting and forbidding subwords, both checked
// against the whole current string. Empty sets impose no condition.
struct ConditionedRule {
  std::string id;
  ContextRule base;
  std::vector<SymString> permit;  // kept sorted, deduplicated
  std::vector<SymString> forbid;
  void canonicalize();
  friend bool operator==(const ConditionedRule&, const ConditionedRule&) = default;
};

ConditionedRule make_rule(std::string id, RuleMode mode, SymString left,
                          SymString body, SymString right,
                          std::vector<SymString> permit = {},
                          std::vector<SymString> forbid = {});

// Componentwise maxima over the rule set: inserted-string / left-context /
// right-context lengths, and the deletion counterparts.
struct SizeVector {
  std::size_t ins_len = 0, ins_left = 0, ins_right = 0;
  std::size_t del_len = 0, del_left = 0, del_right = 0;
  std::size_t total() const {
    return ins_len + ins_left + ins_right + del_len + del_left + del_right;
  }
  friend bool operator==(const SizeVector&, const SizeVector&) = default;
};
std::string show(const SizeVector& s);  // "(n,m,m';p,q,q')"

// Maximum permitting- and forbidding-word lengths over all rules.
struct Degree {
  std::size_t max_permit = 0, max_forbid = 0;
  friend bool operator==(const Degree&, const Degree&) = default;
};
std::string show(const Degree& d);  // "(i,j)"

struct InsDelSystem {
  std::string name;
  std::vector<Symbol> alphabet;   // unique, declaration order
  std::vector<Symbol> terminals;  // subset of alphabet
  std::vector<SymString> axioms;  // non-empty set
  std::vector<ConditionedRule> rules;
  friend bool operator==(const InsDelSystem&, const InsDelSystem&) = default;
};

// Throws Error on the first structural violation.
void validate_system(const InsDelSystem& sys);

bool conditions_hold(const ConditionedRule& rule, const SymString& w);
bool conditions_hold(const ConditionedRule& rule, const FormIndex& idx);

struct StepTriple {
  std::string rule_id;
  std::size_t position;  // symbols strictly left of the gap / deleted body
  SymString result;
};

// Every one-step successor of w, ordered by (rule index, position).
// Validates that w is over the system alphabet.
std::vector<StepTriple> step(const InsDelSystem& sys, const SymString& w);
// Same without the alphabet check; callers guarantee w is over the alphabet.
void step_unchecked(const InsDelSystem& sys, const SymString& w,
                    std::vector<StepTriple>& out);

SizeVector size_of(const InsDelSystem& sys);
Degree degree_of(const InsDelSystem& sys);

SymString insert_at(const SymString& w, std::size_t pos, const SymString& body);
SymString erase_at(const SymString& w, std::size_t pos, std::size_t len);
bool matches_at(const SymString& w, std::size_t at, const SymString& pat);

}  // namespace insdel
