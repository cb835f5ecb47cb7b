#include "insdel/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace insdel {

namespace {

struct InternTable {
  std::mutex mu;
  std::deque<std::string> names;  // stable storage, id -> name
  std::unordered_map<std::string, std::uint32_t> ids;
  InternTable() {
    names.emplace_back("");
    ids.emplace("", 0);
  }
};

InternTable& table() {
  static InternTable t;
  return t;
}

constexpr std::string_view kReserved = "[]{}()#";

}  // namespace

bool Symbol::valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (kReserved.find(c) != std::string_view::npos) return false;
  }
  return true;
}

Symbol Symbol::intern(std::string_view name) {
  if (!valid_name(name))
    throw Error("invalid symbol name: '" + std::string(name) + "'");
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return Symbol(it->second);
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(t.names.back(), id);
  return Symbol(id);
}

const std::string& Symbol::name() const {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names[id_];
}

Symbol sym(std::string_view name) { return Symbol::intern(name); }

SymString symstr(std::initializer_list<std::string_view> names) {
  SymString w;
  w.reserve(names.size());
  for (auto n : names) w.push_back(Symbol::intern(n));
  return w;
}

std::string show(const SymString& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].name();
  }
  out += ']';
  return out;
}

bool symbol_name_less(Symbol a, Symbol b) {
  return a == b ? false : a.name() < b.name();
}

bool canonical_less(const SymString& a, const SymString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return a[i].name() < b[i].name();
  return false;
}

bool matches_at(const SymString& w, std::size_t at, const SymString& pat) {
  if (at + pat.size() > w.size()) return false;
  for (std::size_t i = 0; i < pat.size(); ++i)
    if (!(w[at + i] == pat[i])) return false;
  return true;
}

bool contains_subword(const SymString& w, const SymString& x) {
  if (x.empty()) return true;
  if (x.size() > w.size()) return false;
  for (std::size_t at = 0; at + x.size() <= w.size(); ++at)
    if (matches_at(w, at, x)) return true;
  return false;
}

std::size_t count_occurrences(const SymString& w, Symbol a) {
  std::size_t n = 0;
  for (Symbol s : w)
    if (s == a) ++n;
  return n;
}

FormIndex::FormIndex(const SymString& w) : form_(&w) {
  singles_.reserve(w.size());
  for (Symbol s : w) singles_.push_back(s.id());
  std::sort(singles_.begin(), singles_.end());
  if (w.size() >= 2) {
    pairs_.reserve(w.size() - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      pairs_.push_back((static_cast<std::uint64_t>(w[i].id()) << 32) |
                       w[i + 1].id());
    std::sort(pairs_.begin(), pairs_.end());
  }
}

bool FormIndex::contains(const SymString& word) const {
  switch (word.size()) {
    case 0:
      return true;
    case 1:
      return std::binary_search(singles_.begin(), singles_.end(),
                                word[0].id());
    case 2: {
      std::uint64_t key =
          (static_cast<std::uint64_t>(word[0].id()) << 32) | word[1].id();
      return std::binary_search(pairs_.begin(), pairs_.end(), key);
    }
    default:
      return contains_subword(*form_, word);
  }
}

void ConditionedRule::canonicalize() {
  auto tidy = [](std::vector<SymString>& words) {
    std::sort(words.begin(), words.end(), canonical_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
  };
  tidy(permit);
  tidy(forbid);
}

ConditionedRule make_rule(std::string id, RuleMode mode, SymString left,
                          SymString body, SymString right,
                          std::vector<SymString> permit,
                          std::vector<SymString> forbid) {
  ConditionedRule r;
  r.id = std::move(id);
  r.base = ContextRule{mode, std::move(left), std::move(body), std::move(right)};
  r.permit = std::move(permit);
  r.forbid = std::move(forbid);
  r.canonicalize();
  return r;
}

std::string show(const SizeVector& s) {
  std::ostringstream os;
  os << '(' << s.ins_len << ',' << s.ins_left << ',' << s.ins_right << ';'
     << s.del_len << ',' << s.del_left << ',' << s.del_right << ')';
  return os.str();
}

std::string show(const Degree& d) {
  std::ostringstream os;
  os << '(' << d.max_permit << ',' << d.max_forbid << ')';
  return os.str();
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace

void validate_system(const InsDelSystem& sys) {
  std::unordered_set<std::uint32_t> v;
  for (Symbol s : sys.alphabet) {
    require(s.valid(), "system '" + sys.name + "': invalid alphabet symbol");
    require(v.insert(s.id()).second,
            "system '" + sys.name + "': duplicate alphabet symbol '" +
                s.name() + "'");
  }
  auto over_v = [&](const SymString& w) {
    for (Symbol s : w)
      if (!v.count(s.id())) return s.name();
    return std::string();
  };
  for (Symbol t : sys.terminals)
    require(v.count(t.id()),
            "system '" + sys.name + "': terminal '" + t.name() +
                "' not in alphabet");
  require(!sys.axioms.empty(), "system '" + sys.name + "': no axioms");
  for (const SymString& a : sys.axioms) {
    auto bad = over_v(a);
    require(bad.empty(),
            "system '" + sys.name + "': axiom symbol '" + bad +
                "' not in alphabet");
  }
  std::unordered_set<std::string> ids;
  for (const ConditionedRule& r : sys.rules) {
    require(ids.insert(r.id).second,
            "system '" + sys.name + "': duplicate rule id '" + r.id + "'");
    require(!r.base.body.empty(),
            "system '" + sys.name + "': rule '" + r.id + "' has empty body");
    for (const SymString* part : {&r.base.left, &r.base.body, &r.base.right}) {
      auto bad = over_v(*part);
      require(bad.empty(), "system '" + sys.name + "': rule '" + r.id +
                               "' uses symbol '" + bad + "' not in alphabet");
    }
    for (const auto* words : {&r.permit, &r.forbid})
      for (const SymString& w : *words) {
        require(!w.empty(), "system '" + sys.name + "': rule '" + r.id +
                                "' has an empty condition word");
        auto bad = over_v(w);
        require(bad.empty(), "system '" + sys.name + "': rule '" + r.id +
                                 "' condition symbol '" + bad +
                                 "' not in alphabet");
      }
  }
}

bool conditions_hold(const ConditionedRule& rule, const FormIndex& idx) {
  for (const SymString& x : rule.permit)
    if (!idx.contains(x)) return false;
  for (const SymString& y : rule.forbid)
    if (idx.contains(y)) return false;
  return true;
}

bool conditions_hold(const ConditionedRule& rule, const SymString& w) {
  FormIndex idx(w);
  return conditions_hold(rule, idx);
}

SymString insert_at(const SymString& w, std::size_t pos,
                    const SymString& body) {
  SymString out;
  out.reserve(w.size() + body.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), body.begin(), body.end());
  out.insert(out.end(), w.begin() + pos, w.end());
  return out;
}

SymString erase_at(const SymString& w, std::size_t pos, std::size_t len) {
  SymString out;
  out.reserve(w.size() - len);
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

void step_unchecked(const InsDelSystem& sys, const SymString& w,
                    std::vector<StepTriple>& out) {
  FormIndex idx(w);
  for (const ConditionedRule& r : sys.rules) {
    if (!conditions_hold(r, idx)) continue;
    const ContextRule& b = r.base;
    if (b.mode == RuleMode::insertion) {
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        if (pos < b.left.size()) continue;
        if (!matches_at(w, pos - b.left.size(), b.left)) continue;
        if (!matches_at(w, pos, b.right)) continue;
        out.push_back({r.id, pos, insert_at(w, pos, b.body)});
      }
    } else {
      if (w.size() < b.body.size()) continue;
      for (std::size_t pos = b.left.size(); pos + b.body.size() <= w.size();
           ++pos) {
        if (!matches_at(w, pos - b.left.size(), b.left)) continue;
        if (!matches_at(w, pos, b.body)) continue;
        if (!matches_at(w, pos + b.body.size(), b.right)) continue;
        out.push_back({r.id, pos, erase_at(w, pos, b.body.size())});
      }
    }
  }
}

std::vector<StepTriple> step(const InsDelSystem& sys, const SymString& w) {
  std::unordered_set<std::uint32_t> v;
  for (Symbol s : sys.alphabet) v.insert(s.id());
  for (Symbol s : w)
    if (!v.count(s.id()))
      throw Error("step: symbol '" + s.name() + "' not in alphabet of '" +
                  sys.name + "'");
  std::vector<StepTriple> out;
  step_unchecked(sys, w, out);
  return out;
}

SizeVector size_of(const InsDelSystem& sys) {
  SizeVector s;
  for (const ConditionedRule& r : sys.rules) {
    const ContextRule& b = r.base;
    if (b.mode == RuleMode::insertion) {
      s.ins_len = std::max(s.ins_len, b.body.size());
      s.ins_left = std::max(s.ins_left, b.left.size());
      s.ins_right = std::max(s.ins_right, b.right.size());
    } else {
      s.del_len = std::max(s.del_len, b.body.size());
      s.del_left = std::max(s.del_left, b.left.size());
      s.del_right = std::max(s.del_right, b.right.size());
    }
  }
  return s;
}

Degree degree_of(const InsDelSystem& sys) {
  Degree d;
  for (const ConditionedRule& r : sys.rules) {
    for (const SymString& x : r.permit)
      d.max_permit = std::max(d.max_permit, x.size());
    for (const SymString& y : r.forbid)
      d.max_forbid = std::max(d.max_forbid, y.size());
  }
  return d;
}

}  // namespace insdel
