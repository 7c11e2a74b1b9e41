#pragma once

#include "ltl3/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ltl3 {

inline constexpr std::size_t default_monitor_budget = 20000;

/// Deterministic, complete three-valued machine over the powerset alphabet.
///
/// Each state pairs the live node sets of the automata for f and !f reached
/// by the prefix read so far; its verdict is T when the !f side is empty, F
/// when the f side is empty.
class MonitorAutomaton {
public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return verdicts_.size(); }
  int initial() const noexcept { return 0; }

  int next(int q, std::uint32_t letter) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.letter_count() + letter];
  }
  int next(int q, const State& s) const { return next(q, alphabet_.letter(s)); }
  Verdict verdict(int q) const { return verdicts_.at(static_cast<std::size_t>(q)); }

  const std::vector<int>& live_positive(int q) const { return sets_.at(static_cast<std::size_t>(q)).positive; }
  const std::vector<int>& live_negative(int q) const { return sets_.at(static_cast<std::size_t>(q)).negative; }

  /// State reached after reading t from the initial state.
  int run(const FiniteTrace& t) const;

private:
  friend MonitorAutomaton build_monitor(const Formula& f, const Alphabet& alph,
                                        std::size_t max_states, std::size_t max_nodes);
  Alphabet alphabet_;
  std::vector<VerdictOracle::Position> sets_;
  std::vector<Verdict> verdicts_;
  std::vector<int> delta_; // state * letter_count + letter
};

/// Subset construction over the live parts of the automata for f and !f.
/// Throws BudgetExceeded past max_states monitor states or max_nodes
/// tableau nodes.
MonitorAutomaton build_monitor(const Formula& f, const Alphabet& alph,
                               std::size_t max_states = default_monitor_budget,
                               std::size_t max_nodes = default_node_budget);

std::string to_dot(const MonitorAutomaton& m);

} // namespace ltl3
