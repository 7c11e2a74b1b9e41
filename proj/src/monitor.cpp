#include "ltl3/monitor.hpp"

#include "ltl3/error.hpp"

namespace ltl3 {

Monitor::Monitor(Formula f, Alphabet alph, Backend backend, MonitorOptions options)
    : formula_(std::move(f)), alph_(std::move(alph)), backend_(backend), options_(std::move(options)),
      residual_(formula_) {
  if (!alph_.covers(props(formula_)))
    throw AlphabetError("formula uses propositions outside the monitor alphabet");
  if (backend_ == Backend::Compiled) {
    automaton_ = std::make_shared<const MonitorAutomaton>(
        build_monitor(formula_, alph_, options_.max_monitor_states, options_.max_nodes));
    state_ = automaton_->initial();
    current_ = automaton_->verdict(state_);
  } else {
    if (!options_.cache)
      options_.cache = std::make_shared<ResidualVerdictCache>(alph_, options_.max_nodes);
    else if (!(options_.cache->alphabet() == alph_))
      throw AlphabetError("shared verdict cache was built for a different alphabet");
    max_residual_ = residual_.size();
    current_ = options_.cache->get(residual_);
    if (options_.policy == SimplifyPolicy::SemanticPerStep)
      settle();
  }
  if (options_.latch && current_ != Verdict::Unknown)
    latched_ = current_;
}

void Monitor::settle() {
  if (current_ == Verdict::True)
    residual_ = top();
  else if (current_ == Verdict::False)
    residual_ = bottom();
}

Verdict Monitor::feed(const State& s) {
  const std::uint32_t letter = alph_.letter(s);
  ++steps_;
  if (latched_)
    return *latched_;

  if (backend_ == Backend::Compiled) {
    state_ = automaton_->next(state_, letter);
    current_ = automaton_->verdict(state_);
  } else {
    residual_ = simplify_local(step(residual_, s));
    if (residual_.size() > options_.max_formula_size)
      throw BudgetExceeded("progressed formula size " + std::to_string(residual_.size()) +
                           " exceeds " + std::to_string(options_.max_formula_size));
    max_residual_ = std::max(max_residual_, residual_.size());
    current_ = options_.cache->get(residual_);
    if (options_.policy == SimplifyPolicy::SemanticPerStep)
      settle();
  }
  if (options_.latch && current_ != Verdict::Unknown)
    latched_ = current_;
  return current_;
}

} // namespace ltl3
