#pragma once

#include "ltl3/monitor_automaton.hpp"

#include <optional>
#include <ostream>

namespace ltl3 {

/// Outcome of one classification predicate. Every negative answer carries
/// evidence that can be checked independently:
///  - liveness false: a bad prefix (verdict F);
///  - co-liveness false: a good prefix (verdict T);
///  - monitorable false: an ugly prefix (no extension is ever definitive);
///  - co-safety false: a lasso satisfying f none of whose prefixes is good;
///  - safety false: a lasso violating f none of whose prefixes is bad.
struct Decision {
  bool holds = true;
  std::optional<FiniteTrace> prefix;
  std::optional<LassoTrace> lasso;
};

struct ClassifyLimits {
  std::size_t max_nodes = default_node_budget;
  std::size_t max_monitor_states = default_monitor_budget;
};

/// No finite trace is a bad prefix: no F state is reachable in the monitor.
Decision is_liveness(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits = {});
/// No finite trace is a good prefix: no T state is reachable.
Decision is_co_liveness(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits = {});
/// Every trace satisfying f has a good prefix. Decided by emptiness of the
/// automaton for f run in lockstep with the monitor kept out of T states.
Decision is_co_safety(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits = {});
/// is_co_safety of the negation.
Decision is_safety(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits = {});
/// From every reachable monitor state some T or F state stays reachable.
Decision is_monitorable(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits = {});

struct Classification {
  Decision safety;
  Decision co_safety;
  Decision liveness;
  Decision co_liveness;
  Decision monitorable;
};

Classification classify_all(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits = {});

/// "safety=true cosafety=false liveness=false coliveness=false monitorable=true"
std::string summary(const Classification& c);

} // namespace ltl3
