#include "ltl3/trace_io.hpp"

#include "ltl3/formula.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace ltl3 {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

State make_state(std::vector<std::string> names, std::size_t line) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_valid_prop_name(n))
      throw TraceFormatError("'" + n + "' is not a valid proposition name", line);
    if (!seen.insert(n).second)
      throw TraceFormatError("duplicate proposition '" + n + "' in one state", line);
  }
  return State(std::move(names));
}

} // namespace

FiniteTrace read_jsonl(std::istream& in) {
  FiniteTrace out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty())
      continue;
    const auto j = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded())
      throw TraceFormatError("malformed JSON", line);
    if (!j.is_array())
      throw TraceFormatError("expected a JSON array of proposition names", line);
    std::vector<std::string> names;
    for (const auto& el : j) {
      if (!el.is_string())
        throw TraceFormatError("state entries must be strings", line);
      names.push_back(el.get<std::string>());
    }
    out.push_back(make_state(std::move(names), line));
  }
  return out;
}

FiniteTrace parse_events(std::string_view text) {
  FiniteTrace out;
  if (trim(text).empty())
    return out;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(';', start);
    const auto segment = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::vector<std::string> names;
    if (!trim(segment).empty()) {
      std::size_t p = 0;
      for (;;) {
        const auto comma = segment.find(',', p);
        const auto name = trim(segment.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p));
        if (name.empty())
          throw TraceFormatError("empty proposition name in state " + std::to_string(out.size() + 1), 0);
        names.emplace_back(name);
        if (comma == std::string_view::npos)
          break;
        p = comma + 1;
      }
    }
    try {
      out.push_back(make_state(std::move(names), 0));
    } catch (const TraceFormatError& e) {
      throw TraceFormatError(std::string("state ") + std::to_string(out.size() + 1) + ": " + e.what(), 0);
    }
    if (end == std::string_view::npos)
      break;
    start = end + 1;
  }
  return out;
}

std::string format_events(const FiniteTrace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      out += ';';
    const auto& ps = t[i].props();
    for (std::size_t k = 0; k < ps.size(); ++k)
      out += (k ? "," : "") + ps[k];
  }
  return out;
}

} // namespace ltl3
