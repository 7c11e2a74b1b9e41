#pragma once

#include "ltl3/parser.hpp"
#include "ltl3/trace_io.hpp"

#include <string_view>

namespace th {

inline ltl3::Formula F(std::string_view text) { return ltl3::parse(text); }

/// Compact trace: "a;;a,b" is [{a},{},{a,b}]; "" is the empty trace.
inline ltl3::FiniteTrace T(std::string_view events) { return ltl3::parse_events(events); }

/// Lasso from two compact traces, where "-" stands for the one-state
/// trace [{}] (the compact form of which would be empty).
inline ltl3::LassoTrace L(std::string_view stem, std::string_view loop) {
  const auto part = [](std::string_view s) { return s == "-" ? ltl3::FiniteTrace{ltl3::State{}} : T(s); };
  return ltl3::LassoTrace(part(stem), part(loop));
}

} // namespace th
