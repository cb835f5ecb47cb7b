// engine.hpp -- bounded exhaustive derivation search: language enumeration,
// membership, trace replay and the insertion-pumping transform.
#pragma once

#include <optional>

#include "insdel/core.hpp"

namespace insdel {

// max_form_len and max_steps define the searched universe (forms no longer
// than the cap, reached in at most max_steps derivation steps); max_states
// is a resource budget. Only running out of the budget makes a result
// non-exhaustive.
struct SearchBounds {
  std::size_t max_terminal_len = 6;
  std::size_t max_form_len = 14;  // max_terminal_len + service-symbol slack
  std::size_t max_steps = 64;
  std::size_t max_states = 2'000'000;
  bool valid() const { return max_form_len >= max_terminal_len; }
};

struct SearchOptions {
  unsigned workers = 1;
  // When non-empty, drop successor forms carrying two or more occurrences of
  // these symbols. Sound only for systems that keep such symbols unique.
  std::vector<Symbol> assume_single;
};

struct EnumerationResult {
  std::vector<SymString> terminals;  // sorted by (length, symbol names)
  bool exhausted = false;            // false only if max_states stopped the search
  std::size_t states = 0;
  bool hit_form_cap = false;  // some successor exceeded max_form_len
  bool hit_step_cap = false;  // frontier was non-empty at max_steps
};

struct ReachableResult {
  std::vector<SymString> forms;  // every explored sentential form, sorted
  bool exhausted = false;
  std::size_t states = 0;
  bool hit_form_cap = false;
  bool hit_step_cap = false;
};

struct TraceStep {
  std::string rule_id;
  std::size_t position = 0;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// A replayable derivation witness: a start form plus (rule, position) steps.
struct Trace {
  std::string system_name;
  SymString start;
  std::vector<TraceStep> steps;
  friend bool operator==(const Trace&, const Trace&) = default;
};

enum class ReplayFailure {
  unknown_rule,
  bad_start,
  condition_gating,   // permit/forbid check failed on the current form
  context_mismatch,   // contexts or body do not match at the given position
  not_insertion,
  bad_index,
};
std::string show(ReplayFailure f);

struct ReplayError {
  std::size_t step_index = 0;
  ReplayFailure kind = ReplayFailure::context_mismatch;
  std::string message;
};

struct ReplayResult {
  std::optional<SymString> final_form;
  std::optional<ReplayError> error;
  std::vector<SymString> forms;  // start plus every intermediate reached
  bool ok() const { return final_form.has_value(); }
};

struct PumpResult {
  std::optional<Trace> trace;
  std::optional<SymString> final_form;
  std::optional<ReplayError> error;
  bool ok() const { return trace.has_value(); }
};

enum class Membership { derivable, not_found_within_bounds, certified_absent };

EnumerationResult enumerate_language(const InsDelSystem& sys,
                                     const SearchBounds& bounds,
                                     const SearchOptions& opts = {});

ReachableResult reachable_forms(const InsDelSystem& sys,
                                const SearchBounds& bounds,
                                const SearchOptions& opts = {});

// w must be over the terminal alphabet. certified_absent is relative to the
// searched universe (form-length and depth caps).
Membership membership(const InsDelSystem& sys, const SymString& w,
                      const SearchBounds& bounds,
                      const SearchOptions& opts = {});

// Folds the trace left to right, failing fast at the first inapplicable
// step. Unless allow_any_start, the start form must be an axiom.
ReplayResult replay(const InsDelSystem& sys, const Trace& trace,
                    bool allow_any_start = false);

// Repeats the insertion at steps[step_index] k more times at the same site,
// re-indexing later steps (positions at or right of the site shift by
// k*|alpha|). The result is validated by replay; a failed gate is reported,
// not patched.
PumpResult pump_insertion(const InsDelSystem& sys, const Trace& trace,
                          std::size_t step_index, std::size_t k,
                          bool allow_any_start = false);

// Breadth-first witness search; returns a replayable trace for target if it
// is reachable within bounds.
std::optional<Trace> find_trace(const InsDelSystem& sys,
                                const SymString& target,
                                const SearchBounds& bounds);

}  // namespace insdel
