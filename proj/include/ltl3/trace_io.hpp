#pragma once

#include "ltl3/error.hpp"
#include "ltl3/trace.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace ltl3 {

/// Malformed trace input; line() is 1-based (0 when not line oriented).
class TraceFormatError : public Error {
public:
  TraceFormatError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// JSON Lines: one JSON array of proposition names per state. Blank lines
/// are skipped; duplicate names within a line are rejected.
FiniteTrace read_jsonl(std::istream& in);

/// Compact form: states separated by ';', propositions by ','. An empty
/// segment is the empty state ("a;;a,b" has three states); the empty
/// string is the empty trace.
FiniteTrace parse_events(std::string_view text);

/// Inverse of parse_events for nonempty traces.
std::string format_events(const FiniteTrace& t);

} // namespace ltl3
