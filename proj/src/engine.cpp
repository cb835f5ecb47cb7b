#include "insdel/engine.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bfs_impl.hpp"

namespace insdel {

namespace {

std::unordered_set<std::uint32_t> id_set(const std::vector<Symbol>& syms) {
  std::unordered_set<std::uint32_t> out;
  for (Symbol s : syms) out.insert(s.id());
  return out;
}

bool over(const SymString& w, const std::unordered_set<std::uint32_t>& set) {
  for (Symbol s : w)
    if (!set.count(s.id())) return false;
  return true;
}

detail::BfsOutcome explore(const InsDelSystem& sys, const SearchBounds& bounds,
                           const SearchOptions& opts) {
  validate_system(sys);
  std::vector<StepTriple> triples;
  return detail::bounded_bfs(
      sys.axioms, bounds, opts,
      [&sys](const SymString& w, std::vector<SymString>& out) {
        std::vector<StepTriple> t;
        step_unchecked(sys, w, t);
        for (StepTriple& s : t) out.push_back(std::move(s.result));
      });
}

}  // namespace

std::string show(ReplayFailure f) {
  switch (f) {
    case ReplayFailure::unknown_rule: return "unknown-rule";
    case ReplayFailure::bad_start: return "bad-start";
    case ReplayFailure::condition_gating: return "condition-gating";
    case ReplayFailure::context_mismatch: return "context-mismatch";
    case ReplayFailure::not_insertion: return "not-insertion";
    case ReplayFailure::bad_index: return "bad-index";
  }
  return "?";
}

EnumerationResult enumerate_language(const InsDelSystem& sys,
                                     const SearchBounds& bounds,
                                     const SearchOptions& opts) {
  auto outcome = explore(sys, bounds, opts);
  EnumerationResult res;
  res.exhausted = !outcome.budget_hit;
  res.states = outcome.visited.size();
  res.hit_form_cap = outcome.form_capped;
  res.hit_step_cap = outcome.step_capped;
  auto terminals = id_set(sys.terminals);
  for (const SymString& w : outcome.visited)
    if (w.size() <= bounds.max_terminal_len && over(w, terminals))
      res.terminals.push_back(w);
  std::sort(res.terminals.begin(), res.terminals.end(), canonical_less);
  return res;
}

ReachableResult reachable_forms(const InsDelSystem& sys,
                                const SearchBounds& bounds,
                                const SearchOptions& opts) {
  auto outcome = explore(sys, bounds, opts);
  ReachableResult res;
  res.exhausted = !outcome.budget_hit;
  res.states = outcome.visited.size();
  res.hit_form_cap = outcome.form_capped;
  res.hit_step_cap = outcome.step_capped;
  res.forms.assign(outcome.visited.begin(), outcome.visited.end());
  std::sort(res.forms.begin(), res.forms.end(), canonical_less);
  return res;
}

Membership membership(const InsDelSystem& sys, const SymString& w,
                      const SearchBounds& bounds, const SearchOptions& opts) {
  validate_system(sys);
  auto terminals = id_set(sys.terminals);
  for (Symbol s : w)
    if (!terminals.count(s.id()))
      throw Error("membership: '" + s.name() + "' is not a terminal of '" +
                  sys.name + "'");
  auto outcome = explore(sys, bounds, opts);
  if (outcome.visited.count(w)) return Membership::derivable;
  return outcome.budget_hit ? Membership::not_found_within_bounds
                            : Membership::certified_absent;
}

namespace {

const ConditionedRule* find_rule(const InsDelSystem& sys,
                                 const std::string& id) {
  for (const ConditionedRule& r : sys.rules)
    if (r.id == id) return &r;
  return nullptr;
}

// Checks one step against the current form; nullopt on success.
std::optional<ReplayError> check_step(const ConditionedRule& rule,
                                      const SymString& w, std::size_t pos,
                                      std::size_t index) {
  if (!conditions_hold(rule, w))
    return ReplayError{index, ReplayFailure::condition_gating,
                       "rule '" + rule.id + "' gated on " + show(w)};
  const ContextRule& b = rule.base;
  auto mismatch = [&](const std::string& what) {
    return ReplayError{index, ReplayFailure::context_mismatch,
                       "rule '" + rule.id + "' " + what + " at position " +
                           std::to_string(pos) + " in " + show(w)};
  };
  if (b.mode == RuleMode::insertion) {
    if (pos > w.size()) return mismatch("position out of range");
    if (pos < b.left.size() || !matches_at(w, pos - b.left.size(), b.left))
      return mismatch("left context mismatch");
    if (!matches_at(w, pos, b.right)) return mismatch("right context mismatch");
  } else {
    if (pos + b.body.size() > w.size()) return mismatch("position out of range");
    if (pos < b.left.size() || !matches_at(w, pos - b.left.size(), b.left))
      return mismatch("left context mismatch");
    if (!matches_at(w, pos, b.body)) return mismatch("body mismatch");
    if (!matches_at(w, pos + b.body.size(), b.right))
      return mismatch("right context mismatch");
  }
  return std::nullopt;
}

}  // namespace

ReplayResult replay(const InsDelSystem& sys, const Trace& trace,
                    bool allow_any_start) {
  validate_system(sys);
  ReplayResult res;
  auto alphabet = id_set(sys.alphabet);
  if (!over(trace.start, alphabet)) {
    res.error = ReplayError{0, ReplayFailure::bad_start,
                            "start form " + show(trace.start) +
                                " is not over the system alphabet"};
    return res;
  }
  if (!allow_any_start) {
    bool is_axiom = false;
    for (const SymString& a : sys.axioms)
      if (a == trace.start) is_axiom = true;
    if (!is_axiom) {
      res.error = ReplayError{0, ReplayFailure::bad_start,
                              "start form " + show(trace.start) +
                                  " is not an axiom (pass allow_any_start "
                                  "to replay mid-derivation traces)"};
      return res;
    }
  }
  SymString w = trace.start;
  res.forms.push_back(w);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& st = trace.steps[i];
    const ConditionedRule* rule = find_rule(sys, st.rule_id);
    if (!rule) {
      res.error = ReplayError{i, ReplayFailure::unknown_rule,
                              "no rule '" + st.rule_id + "' in system '" +
                                  sys.name + "'"};
      return res;
    }
    if (auto err = check_step(*rule, w, st.position, i)) {
      res.error = err;
      return res;
    }
    w = rule->base.mode == RuleMode::insertion
            ? insert_at(w, st.position, rule->base.body)
            : erase_at(w, st.position, rule->base.body.size());
    res.forms.push_back(w);
  }
  res.final_form = w;
  return res;
}

PumpResult pump_insertion(const InsDelSystem& sys, const Trace& trace,
                          std::size_t step_index, std::size_t k,
                          bool allow_any_start) {
  PumpResult res;
  if (step_index >= trace.steps.size()) {
    res.error = ReplayError{step_index, ReplayFailure::bad_index,
                            "step index out of range"};
    return res;
  }
  const ConditionedRule* rule = find_rule(sys, trace.steps[step_index].rule_id);
  if (!rule) {
    res.error = ReplayError{step_index, ReplayFailure::unknown_rule,
                            "no rule '" + trace.steps[step_index].rule_id +
                                "' in system '" + sys.name + "'"};
    return res;
  }
  if (rule->base.mode != RuleMode::insertion) {
    res.error = ReplayError{step_index, ReplayFailure::not_insertion,
                            "step " + std::to_string(step_index) +
                                " does not use an insertion rule"};
    return res;
  }

  Trace pumped;
  pumped.system_name = trace.system_name;
  pumped.start = trace.start;
  const std::size_t site = trace.steps[step_index].position;
  const std::size_t shift = k * rule->base.body.size();
  for (std::size_t i = 0; i <= step_index; ++i)
    pumped.steps.push_back(trace.steps[i]);
  for (std::size_t i = 0; i < k; ++i)
    pumped.steps.push_back(TraceStep{rule->id, site});
  for (std::size_t i = step_index + 1; i < trace.steps.size(); ++i) {
    TraceStep st = trace.steps[i];
    if (st.position >= site) st.position += shift;
    pumped.steps.push_back(st);
  }

  ReplayResult check = replay(sys, pumped, allow_any_start);
  if (!check.ok()) {
    res.error = check.error;
    return res;
  }
  res.trace = std::move(pumped);
  res.final_form = check.final_form;
  return res;
}

std::optional<Trace> find_trace(const InsDelSystem& sys,
                                const SymString& target,
                                const SearchBounds& bounds) {
  validate_system(sys);
  if (!bounds.valid())
    throw Error("search bounds: max_form_len < max_terminal_len");

  struct Node {
    SymString form;
    std::size_t parent;  // index into nodes; SIZE_MAX for roots
    std::string rule_id;
    std::size_t position;
  };
  std::vector<Node> nodes;
  std::unordered_map<SymString, std::size_t, SymStringHash> seen;

  auto emit = [&](std::size_t node_index) {
    Trace t;
    t.system_name = sys.name;
    std::vector<TraceStep> rev;
    std::size_t at = node_index;
    while (nodes[at].parent != SIZE_MAX) {
      rev.push_back(TraceStep{nodes[at].rule_id, nodes[at].position});
      at = nodes[at].parent;
    }
    t.start = nodes[at].form;
    t.steps.assign(rev.rbegin(), rev.rend());
    return t;
  };

  std::vector<std::size_t> frontier;
  for (const SymString& a : sys.axioms) {
    if (a.size() > bounds.max_form_len) continue;
    if (seen.count(a)) continue;
    seen.emplace(a, nodes.size());
    nodes.push_back({a, SIZE_MAX, "", 0});
    frontier.push_back(nodes.size() - 1);
    if (a == target) return emit(nodes.size() - 1);
  }

  std::vector<StepTriple> succ;
  for (std::size_t depth = 0; depth < bounds.max_steps && !frontier.empty();
       ++depth) {
    if (nodes.size() >= bounds.max_states) break;
    std::vector<std::size_t> next;
    for (std::size_t at : frontier) {
      succ.clear();
      step_unchecked(sys, nodes[at].form, succ);
      for (StepTriple& s : succ) {
        if (s.result.size() > bounds.max_form_len) continue;
        if (seen.count(s.result)) continue;
        seen.emplace(s.result, nodes.size());
        nodes.push_back({std::move(s.result), at, s.rule_id, s.position});
        next.push_back(nodes.size() - 1);
        if (nodes.back().form == target) return emit(nodes.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace insdel
