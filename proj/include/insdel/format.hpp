// format.hpp -- line-oriented text formats for systems, grammars and traces.
// `#` starts a comment; strings are bracketed symbol lists, `[]` the empty
// string. parse(render(x)) == x for every valid value.
#pragma once

#include <string>

#include "insdel/core.hpp"
#include "insdel/engine.hpp"
#include "insdel/grammar.hpp"

namespace insdel {

// Parse errors carry 1-based line numbers in the message.
InsDelSystem parse_system(const std::string& text);
Grammar parse_grammar(const std::string& text);
Trace parse_trace(const std::string& text);

std::string render_system(const InsDelSystem& sys,
                          const std::string& header_comment = "");
std::string render_grammar(const Grammar& g,
                           const std::string& header_comment = "");
std::string render_trace(const Trace& t);

// "@system" / "@grammar" / "@trace", from the first directive in the text.
std::string sniff_format(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace insdel
