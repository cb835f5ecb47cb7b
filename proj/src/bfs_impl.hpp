// Internal level-synchronous bounded BFS shared by the engine and the
// grammar oracle. Successor filtering and deduplication happen here, so the
// visited set is a pure union and independent of worker count.
#pragma once

#include <thread>
#include <unordered_set>
#include <vector>

#include "insdel/core.hpp"
#include "insdel/engine.hpp"

namespace insdel::detail {

struct BfsOutcome {
  std::unordered_set<SymString, SymStringHash> visited;
  bool budget_hit = false;
  bool form_capped = false;
  bool step_capped = false;
};

// expand(form, out) appends raw successors of form to out.
template <class Expand>
BfsOutcome bounded_bfs(const std::vector<SymString>& starts,
                       const SearchBounds& b, const SearchOptions& opt,
                       Expand expand) {
  if (!b.valid()) throw Error("search bounds: max_form_len < max_terminal_len");
  BfsOutcome out;
  auto keeps_single = [&](const SymString& w) {
    if (opt.assume_single.empty()) return true;
    std::size_t n = 0;
    for (Symbol s : w)
      for (Symbol t : opt.assume_single)
        if (s == t && ++n >= 2) return false;
    return true;
  };

  std::vector<SymString> frontier;
  for (const SymString& s : starts) {
    if (s.size() > b.max_form_len) {
      out.form_capped = true;
      continue;
    }
    if (out.visited.insert(s).second) frontier.push_back(s);
  }

  std::size_t depth = 0;
  while (!frontier.empty()) {
    if (out.visited.size() >= b.max_states) {
      out.budget_hit = true;
      break;
    }
    if (depth >= b.max_steps) {
      out.step_capped = true;
      break;
    }
    unsigned workers = opt.workers == 0 ? 1 : opt.workers;
    if (workers > frontier.size())
      workers = static_cast<unsigned>(frontier.size());
    std::vector<std::vector<SymString>> produced(workers);
    std::vector<char> capped(workers, 0);
    auto work = [&](unsigned wi) {
      std::vector<SymString> local;
      std::vector<SymString> succ;
      for (std::size_t i = wi; i < frontier.size(); i += workers) {
        succ.clear();
        expand(frontier[i], succ);
        for (SymString& s : succ) {
          if (s.size() > b.max_form_len) {
            capped[wi] = 1;
            continue;
          }
          local.push_back(std::move(s));
        }
      }
      produced[wi] = std::move(local);
    };
    if (workers <= 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(workers);
      for (unsigned wi = 0; wi < workers; ++wi) threads.emplace_back(work, wi);
      for (auto& t : threads) t.join();
    }
    std::vector<SymString> next;
    for (unsigned wi = 0; wi < workers; ++wi) {
      if (capped[wi]) out.form_capped = true;
      for (SymString& s : produced[wi]) {
        if (!keeps_single(s)) continue;
        if (out.visited.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return out;
}

}  // namespace insdel::detail
