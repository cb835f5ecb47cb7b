// insdel -- command line front end: check, enumerate, compile, compare,
// replay and pump over the text formats.
//
// Exit codes: 0 success / verdict equal / trace replayed; 1 verdict not
// equal or replay failure; 2 usage or parse errors.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "insdel/construct.hpp"
#include "insdel/core.hpp"
#include "insdel/engine.hpp"
#include "insdel/format.hpp"
#include "insdel/grammar.hpp"
#include "insdel/verify.hpp"

namespace {

using namespace insdel;

struct BoundsFlags {
  std::size_t max_len = 6;
  std::size_t max_form_len = 0;  // 0: max_len + 8
  std::size_t max_steps = 64;
  std::size_t max_states = 2'000'000;
  unsigned workers = 1;
  std::vector<std::string> assume_single;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-len", max_len, "cap on reported terminal strings");
    cmd->add_option("--max-form-len", max_form_len,
                    "cap on sentential form length (default max-len + 8)");
    cmd->add_option("--max-steps", max_steps, "cap on derivation depth");
    cmd->add_option("--max-states", max_states, "explored-state budget");
    cmd->add_option("--workers", workers, "parallel expansion workers");
    cmd->add_option("--assume-single-nprime", assume_single,
                    "drop forms with two or more of these symbols");
  }
  SearchBounds bounds() const {
    SearchBounds b;
    b.max_terminal_len = max_len;
    b.max_form_len = max_form_len ? max_form_len : max_len + 8;
    b.max_steps = max_steps;
    b.max_states = max_states;
    return b;
  }
  SearchOptions options() const {
    SearchOptions o;
    o.workers = workers;
    for (const std::string& s : assume_single)
      o.assume_single.push_back(Symbol::intern(s));
    return o;
  }
};

AlphabetMorphism load_morphism(const std::string& name,
                               const std::string& map_file,
                               const InsDelSystem& sys) {
  if (!map_file.empty()) {
    AlphabetMorphism m;
    std::istringstream in(read_file(map_file));
    std::string from, to;
    while (in >> from >> to)
      m.map.emplace(Symbol::intern(from), Symbol::intern(to));
    return m;
  }
  if (name == "identity") return AlphabetMorphism::identity_morphism();
  if (name == "unhat") return AlphabetMorphism::unhat(sys);
  throw Error("unknown morphism '" + name + "' (use unhat or identity)");
}

int run_check(const std::string& path) {
  std::string text = read_file(path);
  std::string kind = sniff_format(text);
  if (kind == "@system") {
    InsDelSystem sys = parse_system(text);
    std::cout << "system " << sys.name << ": " << sys.alphabet.size()
              << " symbols, " << sys.axioms.size() << " axioms, "
              << sys.rules.size() << " rules\n";
    std::cout << "size " << show(size_of(sys)) << " degree "
              << show(degree_of(sys)) << '\n';
    return 0;
  }
  if (kind == "@grammar") {
    Grammar g = parse_grammar(text);
    std::cout << "grammar " << g.name << " kind=" << show(g.kind) << ": "
              << g.nonterminals.size() << " nonterminals, "
              << g.terminals.size() << " terminals, " << g.rules.size()
              << " rules\n";
    if (g.kind == GrammarKind::sgnf) {
      SgnfReport report = validate_sgnf(g);
      if (report.valid) {
        std::cout << "sgnf: valid\n";
      } else {
        for (const SgnfViolation& v : report.violations)
          std::cout << "sgnf violation [" << v.rule_id << "]: " << v.reason
                    << '\n';
        return 1;
      }
    }
    return 0;
  }
  throw Error("'" + path + "' starts with neither @system nor @grammar");
}

int run_enumerate(const std::string& path, const BoundsFlags& flags) {
  InsDelSystem sys = parse_system(read_file(path));
  EnumerationResult res =
      enumerate_language(sys, flags.bounds(), flags.options());
  for (const SymString& w : res.terminals) std::cout << show(w) << '\n';
  std::cout << "EXHAUSTED " << (res.exhausted ? "true" : "false") << '\n';
  return 0;
}

int run_compile(const std::string& path, const std::string& construction,
                const std::string& out_path) {
  std::string text = read_file(path);
  std::string rendered;
  if (construction == "sc22" || construction == "rc200") {
    Grammar g = parse_grammar(text);
    InsDelSystem sys;
    if (construction == "sc22")
      sys = compile_sc22(g).system;
    else
      sys = compile_rc200(g).system;
    std::ostringstream header;
    header << "compiled by construction " << construction
           << " from grammar '" << g.name << "'\n"
           << "size " << show(size_of(sys)) << " degree "
           << show(degree_of(sys));
    rendered = render_system(sys, header.str());
  } else if (construction == "cf-approx") {
    InsDelSystem sys = parse_system(text);
    CfApproxOutput out = cf_approximation(sys);
    std::ostringstream header;
    header << "compiled by construction cf-approx from system '" << sys.name
           << "'";
    rendered = render_grammar(out.grammar, header.str());
  } else {
    throw Error("unknown construction '" + construction +
                "' (use sc22, rc200 or cf-approx)");
  }
  if (out_path.empty() || out_path == "-")
    std::cout << rendered;
  else
    write_file(out_path, rendered);
  return 0;
}

int run_compare(const std::string& grammar_path, const std::string& system_path,
                const std::string& map_name, const std::string& map_file,
                const BoundsFlags& flags) {
  Grammar g = parse_grammar(read_file(grammar_path));
  InsDelSystem sys = parse_system(read_file(system_path));
  AlphabetMorphism m = load_morphism(map_name, map_file, sys);
  ComparisonReport report =
      compare_languages(sys, g, m, flags.bounds(), flags.options());
  std::cout << render_text(report);
  std::cout << render_machine(report);
  return report.verdict == Verdict::equal ? 0 : 1;
}

int run_replay(const std::string& system_path, const std::string& trace_path,
               bool any_start) {
  InsDelSystem sys = parse_system(read_file(system_path));
  Trace t = parse_trace(read_file(trace_path));
  ReplayResult res = replay(sys, t, any_start);
  if (!res.ok()) {
    std::cout << "replay failed at step " << res.error->step_index << " ("
              << show(res.error->kind) << "): " << res.error->message << '\n';
    return 1;
  }
  std::cout << show(*res.final_form) << '\n';
  return 0;
}

int run_pump(const std::string& system_path, const std::string& trace_path,
             std::size_t step, std::size_t k, bool any_start,
             const std::string& out_path) {
  InsDelSystem sys = parse_system(read_file(system_path));
  Trace t = parse_trace(read_file(trace_path));
  PumpResult res = pump_insertion(sys, t, step, k, any_start);
  if (!res.ok()) {
    std::cout << "pump failed at step " << res.error->step_index << " ("
              << show(res.error->kind) << "): " << res.error->message << '\n';
    return 1;
  }
  std::cout << show(*res.final_form) << '\n';
  if (!out_path.empty()) write_file(out_path, render_trace(*res.trace));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for conditional insertion-deletion systems"};
  app.require_subcommand(1);

  std::string file, out_path, construction, map_name = "identity", map_file;
  std::string grammar_path, system_path, trace_path;
  bool any_start = false;
  std::size_t pump_step = 0, pump_k = 0;
  BoundsFlags flags;

  CLI::App* check = app.add_subcommand("check", "parse and validate a file");
  check->add_option("file", file, "system or grammar file")->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "bounded language enumeration");
  enumerate->add_option("file", file, "system file")->required();
  flags.attach(enumerate);

  CLI::App* compile =
      app.add_subcommand("compile", "emit a construction for a grammar");
  compile->add_option("file", file, "grammar file (system for cf-approx)")
      ->required();
  compile->add_option("--construction", construction, "sc22|rc200|cf-approx")
      ->required();
  compile->add_option("-o,--output", out_path, "output file ('-' for stdout)");

  CLI::App* compare = app.add_subcommand(
      "compare", "bounded comparison of a system against a grammar oracle");
  compare->add_option("grammar", grammar_path, "grammar file")->required();
  compare->add_option("system", system_path, "system file")->required();
  compare->add_option("--map", map_name, "unhat|identity");
  compare->add_option("--map-file", map_file, "morphism file: 'from to' lines");
  flags.attach(compare);

  CLI::App* replay_cmd = app.add_subcommand("replay", "replay a trace");
  replay_cmd->add_option("system", system_path, "system file")->required();
  replay_cmd->add_option("trace", trace_path, "trace file")->required();
  replay_cmd->add_flag("--any-start", any_start,
                       "allow a start form that is not an axiom");

  CLI::App* pump = app.add_subcommand(
      "pump", "repeat an insertion step and replay the result");
  pump->add_option("system", system_path, "system file")->required();
  pump->add_option("trace", trace_path, "trace file")->required();
  pump->add_option("--step", pump_step, "index of the insertion step")
      ->required();
  pump->add_option("--k", pump_k, "extra applications")->required();
  pump->add_flag("--any-start", any_start,
                 "allow a start form that is not an axiom");
  pump->add_option("-o,--output", out_path, "write the pumped trace here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(file);
    if (*enumerate) return run_enumerate(file, flags);
    if (*compile) return run_compile(file, construction, out_path);
    if (*compare)
      return run_compare(grammar_path, system_path, map_name, map_file, flags);
    if (*replay_cmd) return run_replay(system_path, trace_path, any_start);
    if (*pump)
      return run_pump(system_path, trace_path, pump_step, pump_k, any_start,
                      out_path);
  } catch (const insdel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
