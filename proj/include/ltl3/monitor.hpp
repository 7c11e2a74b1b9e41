#pragma once

#include "ltl3/monitor_automaton.hpp"
#include "ltl3/progression.hpp"

#include <memory>
#include <optional>

namespace ltl3 {

enum class Backend { Progression, Compiled };

struct MonitorOptions {
  SimplifyPolicy policy = SimplifyPolicy::SemanticFinal;
  /// Stop doing backend work once a verdict is definitive. Turning this off
  /// is only useful for checking that latching never changes an answer.
  bool latch = true;
  std::size_t max_nodes = default_node_budget;
  std::size_t max_monitor_states = default_monitor_budget;
  std::size_t max_formula_size = default_formula_ceiling;
  /// Optional verdict memo shared between progression monitors over the
  /// same alphabet.
  std::shared_ptr<ResidualVerdictCache> cache;
};

/// A streaming monitoring session. Not thread-safe; distinct sessions are
/// independent.
class Monitor {
public:
  /// Computes the verdict for the empty trace. Throws AlphabetError when f
  /// uses propositions outside alph, BudgetExceeded when the compiled
  /// automaton is too large.
  Monitor(Formula f, Alphabet alph, Backend backend, MonitorOptions options = {});

  /// Reads one state and returns the verdict for everything fed so far.
  Verdict feed(const State& s);
  Verdict verdict() const noexcept { return current_; }

  std::size_t steps_fed() const noexcept { return steps_; }
  std::optional<Verdict> latched() const noexcept { return latched_; }
  const Formula& formula() const noexcept { return formula_; }
  const Alphabet& alphabet() const noexcept { return alph_; }
  Backend backend() const noexcept { return backend_; }

  /// Progression backend: the current residual formula.
  const Formula& residual() const noexcept { return residual_; }
  /// Progression backend: largest residual seen so far.
  std::size_t max_residual_size() const noexcept { return max_residual_; }
  /// Compiled backend: the automaton (null for progression).
  const std::shared_ptr<const MonitorAutomaton>& automaton() const noexcept { return automaton_; }
  /// Compiled backend: current automaton state.
  int automaton_state() const noexcept { return state_; }

private:
  void settle();

  Formula formula_;
  Alphabet alph_;
  Backend backend_;
  MonitorOptions options_;

  Formula residual_;
  std::size_t max_residual_ = 0;
  std::shared_ptr<const MonitorAutomaton> automaton_;
  int state_ = 0;

  Verdict current_ = Verdict::Unknown;
  std::size_t steps_ = 0;
  std::optional<Verdict> latched_;
};

} // namespace ltl3
