#pragma once

#include <string>
#include <string_view>

#include "ggs/model.hpp"

namespace ggs {

// Raised with a line number and message for malformed pair files.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Line-oriented text format. '#' starts a comment, tokens are
// whitespace-separated, LF or CRLF both accepted. Directives:
//   pair <name>
//   orientable true|false
//   sing <id> kind=<kind-expr> nature=<word> [lifts=<n>]
//   line <id> src=<sid>:<k>:<i> dst=<sid>:<k>:<i> part=regular|fold lifts=<+-1>[,<+-1>]
//   fold <sid> <sid>
//   order <sid>:<k>:<i> ...
GGSPair parse_pair_text(std::string_view text);

GGSPair parse_pair_file(const std::string& path);

// Canonical text form; parse_pair_text(pair_to_text(p)) reproduces p.
std::string pair_to_text(const GGSPair& pair);

}  // namespace ggs
