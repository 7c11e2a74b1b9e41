#pragma once

#include "ltl3/monitor_automaton.hpp"
#include "ltl3/progression.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace ltl3 {

/// Verdicts of the three independent routes for one (formula, trace) case.
struct VerdictTriple {
  Verdict progression = Verdict::Unknown;
  Verdict oracle = Verdict::Unknown;
  Verdict compiled = Verdict::Unknown;
  bool agree() const { return progression == oracle && oracle == compiled; }
};

struct CrossCheckLimits {
  std::size_t max_nodes = default_node_budget;
  std::size_t max_monitor_states = default_monitor_budget;
  std::size_t max_formula_size = default_formula_ceiling;
};

using TraceVisitor = std::function<void(const FiniteTrace&, const VerdictTriple&)>;

/// Feeds every trace of length <= max_len over alph (depth first, shortest
/// prefix before its extensions) to progression, the verdict oracle and the
/// compiled monitor at once, reporting each prefix's verdicts. Residual
/// verdicts are memoised in cache, which must be over alph.
void sweep_traces(const Formula& f, const Alphabet& alph, std::size_t max_len,
                  ResidualVerdictCache& cache, const TraceVisitor& visit,
                  const CrossCheckLimits& limits = {});

/// The three verdicts for a single case.
VerdictTriple verdict_triple(const Formula& f, const FiniteTrace& t, const Alphabet& alph,
                             ResidualVerdictCache& cache, const CrossCheckLimits& limits = {});

struct CrossCheckReport {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0; // formulas or cases abandoned on a budget error
  std::vector<std::string> counterexamples;
  std::vector<std::string> budget_errors;

  std::string summary() const;
};

/// All formulas up to max_size over alph's propositions against all traces
/// up to max_len. With verbose set, one line per case is written there.
CrossCheckReport crosscheck_exhaustive(std::size_t max_size, std::size_t max_len, const Alphabet& alph,
                                       std::ostream* verbose = nullptr, const CrossCheckLimits& limits = {});

/// count seeded random (formula, trace) cases.
CrossCheckReport crosscheck_random(std::uint64_t seed, std::size_t count, std::size_t max_size,
                                   std::size_t max_len, const Alphabet& alph,
                                   std::ostream* verbose = nullptr, const CrossCheckLimits& limits = {});

} // namespace ltl3
