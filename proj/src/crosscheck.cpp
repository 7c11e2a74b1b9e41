#include "ltl3/crosscheck.hpp"

#include "ltl3/error.hpp"
#include "ltl3/generate.hpp"
#include "ltl3/oracle.hpp"

#include <sstream>

namespace ltl3 {
namespace {

struct Sweep {
  const Alphabet& alph;
  std::size_t max_len;
  ResidualVerdictCache& cache;
  const TraceVisitor& visit;
  const VerdictOracle& oracle;
  const MonitorAutomaton& monitor;
  std::size_t max_formula_size;
  std::vector<State> states;
  FiniteTrace trace;

  void go(const VerdictOracle::Position& pos, int q, const Formula& residual) {
    VerdictTriple v;
    v.oracle = VerdictOracle::verdict_at(pos);
    v.compiled = monitor.verdict(q);
    v.progression = cache.get(residual);
    visit(trace, v);
    if (trace.size() == max_len)
      return;
    for (std::uint32_t l = 0; l < alph.letter_count(); ++l) {
      const State& s = states[l];
      Formula next_residual = simplify_local(step(residual, s));
      if (next_residual.size() > max_formula_size)
        throw BudgetExceeded("progressed formula exceeds size ceiling");
      trace.push_back(s);
      go(oracle.advance(pos, l), monitor.next(q, l), next_residual);
      trace.pop_back();
    }
  }
};

std::string describe(const Formula& f, const FiniteTrace& t, const VerdictTriple& v) {
  std::ostringstream os;
  os << render(f) << '\t' << t << "\tprogression=" << v.progression << " oracle=" << v.oracle
     << " compiled=" << v.compiled;
  return os.str();
}

} // namespace

void sweep_traces(const Formula& f, const Alphabet& alph, std::size_t max_len, ResidualVerdictCache& cache,
                  const TraceVisitor& visit, const CrossCheckLimits& limits) {
  if (!(cache.alphabet() == alph))
    throw AlphabetError("verdict cache alphabet differs from the sweep alphabet");
  const VerdictOracle oracle(f, alph, limits.max_nodes);
  const MonitorAutomaton monitor = build_monitor(f, alph, limits.max_monitor_states, limits.max_nodes);
  Sweep s{alph, max_len, cache, visit, oracle, monitor, limits.max_formula_size, alph.states(), {}};
  s.go(oracle.start(), monitor.initial(), f);
}

VerdictTriple verdict_triple(const Formula& f, const FiniteTrace& t, const Alphabet& alph,
                             ResidualVerdictCache& cache, const CrossCheckLimits& limits) {
  check_trace(alph, t);
  VerdictTriple v;
  v.oracle = VerdictOracle(f, alph, limits.max_nodes).verdict(t);
  v.compiled = [&] {
    const auto m = build_monitor(f, alph, limits.max_monitor_states, limits.max_nodes);
    return m.verdict(m.run(t));
  }();
  Formula residual = f;
  for (const auto& s : t) {
    residual = simplify_local(step(residual, s));
    if (residual.size() > limits.max_formula_size)
      throw BudgetExceeded("progressed formula exceeds size ceiling");
  }
  v.progression = cache.get(residual);
  return v;
}

std::string CrossCheckReport::summary() const {
  std::string s = std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches";
  if (skipped)
    s += ", " + std::to_string(skipped) + " skipped";
  return s;
}

CrossCheckReport crosscheck_exhaustive(std::size_t max_size, std::size_t max_len, const Alphabet& alph,
                                       std::ostream* verbose, const CrossCheckLimits& limits) {
  CrossCheckReport report;
  ResidualVerdictCache cache(alph, limits.max_nodes);
  for (const auto& f : enumerate_formulas(max_size, alph.props())) {
    try {
      sweep_traces(f, alph, max_len, cache, [&](const FiniteTrace& t, const VerdictTriple& v) {
        ++report.cases;
        if (verbose)
          *verbose << "case " << report.cases << '\t' << describe(f, t, v) << '\n';
        if (!v.agree()) {
          ++report.mismatches;
          report.counterexamples.push_back(describe(f, t, v));
        }
      }, limits);
    } catch (const BudgetExceeded& e) {
      ++report.skipped;
      report.budget_errors.push_back(render(f) + '\t' + e.what());
    }
  }
  return report;
}

CrossCheckReport crosscheck_random(std::uint64_t seed, std::size_t count, std::size_t max_size,
                                   std::size_t max_len, const Alphabet& alph, std::ostream* verbose,
                                   const CrossCheckLimits& limits) {
  CrossCheckReport report;
  ResidualVerdictCache cache(alph, limits.max_nodes);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_size))(rng);
    const Formula f = random_formula(rng, size, alph.props());
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    const FiniteTrace t = random_trace(rng, alph, len);
    ++report.cases;
    try {
      const auto v = verdict_triple(f, t, alph, cache, limits);
      if (verbose)
        *verbose << "case " << report.cases << '\t' << describe(f, t, v) << '\n';
      if (!v.agree()) {
        ++report.mismatches;
        report.counterexamples.push_back(describe(f, t, v));
      }
    } catch (const BudgetExceeded& e) {
      ++report.skipped;
      report.budget_errors.push_back(render(f) + '\t' + e.what());
    }
  }
  return report;
}

} // namespace ltl3
