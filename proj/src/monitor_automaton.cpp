#include "ltl3/monitor_automaton.hpp"

#include "ltl3/error.hpp"

#include <map>
#include <sstream>

namespace ltl3 {

int MonitorAutomaton::run(const FiniteTrace& t) const {
  int q = initial();
  for (const auto& s : t)
    q = next(q, s);
  return q;
}

MonitorAutomaton build_monitor(const Formula& f, const Alphabet& alph, std::size_t max_states,
                               std::size_t max_nodes) {
  const VerdictOracle oracle(f, alph, max_nodes);
  MonitorAutomaton m;
  m.alphabet_ = alph;

  std::map<std::pair<std::vector<int>, std::vector<int>>, int> ids;
  auto intern = [&](VerdictOracle::Position p) {
    auto key = std::make_pair(p.positive, p.negative);
    auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(m.sets_.size()));
    if (fresh) {
      if (m.sets_.size() >= max_states)
        throw BudgetExceeded("monitor construction exceeded " + std::to_string(max_states) + " states");
      m.verdicts_.push_back(VerdictOracle::verdict_at(p));
      m.sets_.push_back(std::move(p));
    }
    return it->second;
  };

  intern(oracle.start());
  const std::uint32_t letters = alph.letter_count();
  for (std::size_t q = 0; q < m.sets_.size(); ++q) {
    m.delta_.resize((q + 1) * letters);
    for (std::uint32_t l = 0; l < letters; ++l) {
      const int target = intern(oracle.advance(m.sets_[q], l));
      m.delta_[q * letters + l] = target;
    }
  }
  return m;
}

std::string to_dot(const MonitorAutomaton& m) {
  std::ostringstream os;
  os << "digraph monitor {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    const Verdict v = m.verdict(static_cast<int>(q));
    const char* color = v == Verdict::True ? "palegreen" : v == Verdict::False ? "lightpink" : "white";
    os << "  q" << q << " [label=\"q" << q << "\\n" << to_char(v)
       << "\", style=filled, fillcolor=" << color << "];\n";
  }
  os << "  init -> q" << m.initial() << ";\n";
  const auto& alph = m.alphabet();
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    // Group letters by target so the picture stays readable.
    std::map<int, std::vector<std::uint32_t>> by_target;
    for (std::uint32_t l = 0; l < alph.letter_count(); ++l)
      by_target[m.next(static_cast<int>(q), l)].push_back(l);
    for (const auto& [target, ls] : by_target) {
      os << "  q" << q << " -> q" << target << " [label=\"";
      for (std::size_t i = 0; i < ls.size(); ++i)
        os << (i ? " " : "") << alph.state(ls[i]);
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace ltl3
