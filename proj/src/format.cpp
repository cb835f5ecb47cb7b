#include "insdel/format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace insdel {

namespace {

struct Tok {
  enum Kind { word, lbrack, rbrack, lbrace, rbrace, lparen, rparen } kind;
  std::string text;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error("line " + std::to_string(line) + ": " + msg);
}

std::vector<Tok> lex_line(const std::string& line, std::size_t lineno) {
  std::vector<Tok> toks;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      toks.push_back({Tok::word, word});
      word.clear();
    }
  };
  for (char c : line) {
    if (c == '#') break;  // comment to end of line
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    switch (c) {
      case '[': flush(); toks.push_back({Tok::lbrack, "["}); break;
      case ']': flush(); toks.push_back({Tok::rbrack, "]"}); break;
      case '{': flush(); toks.push_back({Tok::lbrace, "{"}); break;
      case '}': flush(); toks.push_back({Tok::rbrace, "}"}); break;
      case '(': flush(); toks.push_back({Tok::lparen, "("}); break;
      case ')': flush(); toks.push_back({Tok::rparen, ")"}); break;
      default: word += c;
    }
  }
  flush();
  (void)lineno;
  return toks;
}

// cursor over one line of tokens
struct Cursor {
  const std::vector<Tok>* toks;
  std::size_t at = 0;
  std::size_t line;
  bool done() const { return at >= toks->size(); }
  const Tok& peek() const {
    if (done()) fail(line, "unexpected end of line");
    return (*toks)[at];
  }
  Tok take(Tok::Kind kind, const std::string& what) {
    const Tok& t = peek();
    if (t.kind != kind) fail(line, "expected " + what + ", got '" + t.text + "'");
    ++at;
    return t;
  }
  std::string take_word(const std::string& what) {
    return take(Tok::word, what).text;
  }
};

SymString parse_bracket_string(Cursor& c) {
  c.take(Tok::lbrack, "'['");
  SymString w;
  while (!c.done() && c.peek().kind == Tok::word)
    w.push_back(Symbol::intern(c.take_word("symbol")));
  c.take(Tok::rbrack, "']'");
  return w;
}

std::vector<SymString> parse_word_set(Cursor& c) {
  c.take(Tok::lbrace, "'{'");
  std::vector<SymString> words;
  while (!c.done() && c.peek().kind == Tok::lbrack) {
    SymString w = parse_bracket_string(c);
    if (w.empty()) fail(c.line, "empty condition word");
    words.push_back(std::move(w));
  }
  c.take(Tok::rbrace, "'}'");
  return words;
}

std::size_t parse_number(Cursor& c) {
  std::string w = c.take_word("number");
  for (char ch : w)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail(c.line, "expected number, got '" + w + "'");
  return std::stoull(w);
}

struct DeclaredSymbols {
  std::unordered_set<std::uint32_t> ids;
  void add(Symbol s) { ids.insert(s.id()); }
  bool has(Symbol s) const { return ids.count(s.id()) != 0; }
};

void check_declared(const SymString& w, const DeclaredSymbols& decl,
                    std::size_t line) {
  for (Symbol s : w)
    if (!decl.has(s)) fail(line, "unknown symbol " + s.name());
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string render_conditions(const std::vector<SymString>& permit,
                              const std::vector<SymString>& forbid) {
  std::ostringstream os;
  os << " permit {";
  for (std::size_t i = 0; i < permit.size(); ++i)
    os << (i ? " " : "") << show(permit[i]);
  os << "} forbid {";
  for (std::size_t i = 0; i < forbid.size(); ++i)
    os << (i ? " " : "") << show(forbid[i]);
  os << "}";
  return os.str();
}

}  // namespace

InsDelSystem parse_system(const std::string& text) {
  InsDelSystem sys;
  DeclaredSymbols decl;
  std::unordered_set<std::string> rule_ids;
  bool named = false;
  std::size_t lineno = 0;
  for (const std::string& raw : split_lines(text)) {
    ++lineno;
    auto toks = lex_line(raw, lineno);
    if (toks.empty()) continue;
    Cursor c{&toks, 0, lineno};
    std::string head = c.take_word("directive");
    if (head == "@system") {
      sys.name = c.take_word("system name");
      named = true;
    } else if (head == "@alphabet") {
      while (!c.done()) {
        Symbol s = Symbol::intern(c.take_word("symbol"));
        if (decl.has(s)) fail(lineno, "duplicate alphabet symbol " + s.name());
        decl.add(s);
        sys.alphabet.push_back(s);
      }
    } else if (head == "@terminals") {
      while (!c.done()) {
        Symbol s = Symbol::intern(c.take_word("symbol"));
        if (!decl.has(s)) fail(lineno, "unknown symbol " + s.name());
        sys.terminals.push_back(s);
      }
    } else if (head == "@axiom") {
      SymString w = parse_bracket_string(c);
      check_declared(w, decl, lineno);
      sys.axioms.push_back(std::move(w));
    } else if (head == "@rule") {
      std::string id = c.take_word("rule id");
      if (!rule_ids.insert(id).second)
        fail(lineno, "duplicate rule id '" + id + "'");
      std::string mode = c.take_word("ins|del");
      if (mode != "ins" && mode != "del")
        fail(lineno, "rule mode must be ins or del, got '" + mode + "'");
      SymString parts[3];
      for (auto& part : parts) {
        c.take(Tok::lparen, "'('");
        part = parse_bracket_string(c);
        c.take(Tok::rparen, "')'");
        check_declared(part, decl, lineno);
      }
      if (parts[1].empty()) fail(lineno, "empty insertion/deletion body");
      std::vector<SymString> permit, forbid;
      while (!c.done()) {
        std::string clause = c.take_word("permit|forbid");
        std::vector<SymString>* dst = nullptr;
        if (clause == "permit") dst = &permit;
        else if (clause == "forbid") dst = &forbid;
        else fail(lineno, "expected permit or forbid, got '" + clause + "'");
        *dst = parse_word_set(c);
        for (const SymString& w : *dst) check_declared(w, decl, lineno);
      }
      sys.rules.push_back(make_rule(
          std::move(id),
          mode == "ins" ? RuleMode::insertion : RuleMode::deletion,
          std::move(parts[0]), std::move(parts[1]), std::move(parts[2]),
          std::move(permit), std::move(forbid)));
    } else {
      fail(lineno, "unknown directive '" + head + "'");
    }
    if (!c.done()) fail(lineno, "trailing tokens after directive");
  }
  if (!named) throw Error("missing @system directive");
  validate_system(sys);
  return sys;
}

Grammar parse_grammar(const std::string& text) {
  Grammar g;
  DeclaredSymbols decl;
  std::unordered_set<std::string> rule_ids;
  bool named = false;
  std::size_t lineno = 0;
  for (const std::string& raw : split_lines(text)) {
    ++lineno;
    auto toks = lex_line(raw, lineno);
    if (toks.empty()) continue;
    Cursor c{&toks, 0, lineno};
    std::string head = c.take_word("directive");
    if (head == "@grammar") {
      g.name = c.take_word("grammar name");
      std::string kind = c.take_word("kind=...");
      if (kind.compare(0, 5, "kind=") != 0)
        fail(lineno, "expected kind=cf|rc|sc|sgnf");
      std::string k = kind.substr(5);
      if (k == "cf") g.kind = GrammarKind::cf;
      else if (k == "rc") g.kind = GrammarKind::rc;
      else if (k == "sc") g.kind = GrammarKind::sc;
      else if (k == "sgnf") g.kind = GrammarKind::sgnf;
      else fail(lineno, "unknown grammar kind '" + k + "'");
      named = true;
    } else if (head == "@nonterminals") {
      while (!c.done()) {
        Symbol s = Symbol::intern(c.take_word("symbol"));
        if (decl.has(s)) fail(lineno, "duplicate symbol " + s.name());
        decl.add(s);
        g.nonterminals.push_back(s);
      }
    } else if (head == "@terminals") {
      while (!c.done()) {
        Symbol s = Symbol::intern(c.take_word("symbol"));
        if (decl.has(s)) fail(lineno, "duplicate symbol " + s.name());
        decl.add(s);
        g.terminals.push_back(s);
      }
    } else if (head == "@start") {
      g.start = Symbol::intern(c.take_word("symbol"));
      if (!decl.has(g.start)) fail(lineno, "unknown symbol " + g.start.name());
    } else if (head == "@nprime") {
      while (!c.done()) {
        Symbol s = Symbol::intern(c.take_word("symbol"));
        if (!decl.has(s)) fail(lineno, "unknown symbol " + s.name());
        g.nprime.push_back(s);
      }
    } else if (head == "@ndouble") {
      while (!c.done()) {
        Symbol s = Symbol::intern(c.take_word("symbol"));
        if (!decl.has(s)) fail(lineno, "unknown symbol " + s.name());
        g.ndouble.push_back(s);
      }
    } else if (head == "@sprime") {
      g.sprime = Symbol::intern(c.take_word("symbol"));
      if (!decl.has(g.sprime))
        fail(lineno, "unknown symbol " + g.sprime.name());
    } else if (head == "@rule") {
      std::string id = c.take_word("rule id");
      if (!rule_ids.insert(id).second)
        fail(lineno, "duplicate rule id '" + id + "'");
      SymString lhs;
      while (!c.done() && c.peek().kind == Tok::lbrack) {
        SymString part = parse_bracket_string(c);
        lhs.insert(lhs.end(), part.begin(), part.end());
      }
      check_declared(lhs, decl, lineno);
      if (lhs.empty()) fail(lineno, "empty rule lhs");
      std::string arrow = c.take_word("'->'");
      if (arrow != "->") fail(lineno, "expected '->', got '" + arrow + "'");
      SymString rhs;
      while (!c.done() && c.peek().kind == Tok::lbrack) {
        SymString part = parse_bracket_string(c);
        rhs.insert(rhs.end(), part.begin(), part.end());
      }
      check_declared(rhs, decl, lineno);
      std::vector<SymString> permit, forbid;
      while (!c.done()) {
        std::string clause = c.take_word("permit|forbid");
        std::vector<SymString>* dst = nullptr;
        if (clause == "permit") dst = &permit;
        else if (clause == "forbid") dst = &forbid;
        else fail(lineno, "expected permit or forbid, got '" + clause + "'");
        *dst = parse_word_set(c);
        for (const SymString& w : *dst) check_declared(w, decl, lineno);
      }
      g.rules.push_back(make_grammar_rule(std::move(id), std::move(lhs),
                                          std::move(rhs), std::move(permit),
                                          std::move(forbid)));
    } else {
      fail(lineno, "unknown directive '" + head + "'");
    }
    if (!c.done()) fail(lineno, "trailing tokens after directive");
  }
  if (!named) throw Error("missing @grammar directive");
  validate_grammar(g);
  return g;
}

Trace parse_trace(const std::string& text) {
  Trace t;
  bool named = false, started = false;
  std::size_t lineno = 0;
  for (const std::string& raw : split_lines(text)) {
    ++lineno;
    auto toks = lex_line(raw, lineno);
    if (toks.empty()) continue;
    Cursor c{&toks, 0, lineno};
    std::string head = c.take_word("directive");
    if (head == "@trace") {
      t.system_name = c.take_word("system name");
      named = true;
    } else if (head == "@start") {
      t.start = parse_bracket_string(c);
      started = true;
    } else if (head == "step") {
      TraceStep st;
      st.rule_id = c.take_word("rule id");
      std::string at = c.take_word("'@'");
      if (at != "@") fail(lineno, "expected '@', got '" + at + "'");
      st.position = parse_number(c);
      t.steps.push_back(std::move(st));
    } else {
      fail(lineno, "unknown directive '" + head + "'");
    }
    if (!c.done()) fail(lineno, "trailing tokens after directive");
  }
  if (!named) throw Error("missing @trace directive");
  if (!started) throw Error("missing @start directive");
  return t;
}

namespace {

void render_symbols(std::ostringstream& os, const std::string& directive,
                    const std::vector<Symbol>& syms) {
  if (syms.empty()) return;
  os << directive;
  for (Symbol s : syms) os << ' ' << s.name();
  os << '\n';
}

void render_header(std::ostringstream& os, const std::string& comment) {
  if (comment.empty()) return;
  std::istringstream in(comment);
  std::string line;
  while (std::getline(in, line)) os << "# " << line << '\n';
}

}  // namespace

std::string render_system(const InsDelSystem& sys,
                          const std::string& header_comment) {
  std::ostringstream os;
  render_header(os, header_comment);
  os << "@system " << sys.name << '\n';
  render_symbols(os, "@alphabet", sys.alphabet);
  render_symbols(os, "@terminals", sys.terminals);
  for (const SymString& a : sys.axioms) os << "@axiom " << show(a) << '\n';
  for (const ConditionedRule& r : sys.rules) {
    os << "@rule " << r.id << ' '
       << (r.base.mode == RuleMode::insertion ? "ins" : "del") << " ("
       << show(r.base.left) << ")(" << show(r.base.body) << ")("
       << show(r.base.right) << ")" << render_conditions(r.permit, r.forbid)
       << '\n';
  }
  return os.str();
}

std::string render_grammar(const Grammar& g,
                           const std::string& header_comment) {
  std::ostringstream os;
  render_header(os, header_comment);
  if (!g.comment.empty()) render_header(os, g.comment);
  os << "@grammar " << g.name << " kind=" << show(g.kind) << '\n';
  render_symbols(os, "@nonterminals", g.nonterminals);
  render_symbols(os, "@terminals", g.terminals);
  os << "@start " << g.start.name() << '\n';
  render_symbols(os, "@nprime", g.nprime);
  render_symbols(os, "@ndouble", g.ndouble);
  if (g.sprime.valid()) os << "@sprime " << g.sprime.name() << '\n';
  for (const GrammarRule& r : g.rules) {
    os << "@rule " << r.id << ' ' << show(r.lhs) << " -> " << show(r.rhs)
       << render_conditions(r.permit, r.forbid) << '\n';
  }
  return os.str();
}

std::string render_trace(const Trace& t) {
  std::ostringstream os;
  os << "@trace " << t.system_name << '\n';
  os << "@start " << show(t.start) << '\n';
  for (const TraceStep& st : t.steps)
    os << "step " << st.rule_id << " @ " << st.position << '\n';
  return os.str();
}

std::string sniff_format(const std::string& text) {
  std::size_t lineno = 0;
  for (const std::string& raw : split_lines(text)) {
    ++lineno;
    auto toks = lex_line(raw, lineno);
    if (toks.empty()) continue;
    if (toks[0].kind == Tok::word) return toks[0].text;
    break;
  }
  return "";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace insdel
