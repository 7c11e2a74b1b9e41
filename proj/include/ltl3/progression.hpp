#pragma once

#include "ltl3/buchi.hpp"
#include "ltl3/formula.hpp"
#include "ltl3/semantics.hpp"
#include "ltl3/trace.hpp"

#include <cstddef>
#include <unordered_map>

namespace ltl3 {

/// How residual formulas are simplified between progression steps.
enum class SimplifyPolicy {
  LocalOnly,       // propositional identities only
  SemanticPerStep, // collapse tautologies/absurdities after every step
  SemanticFinal,   // local per step; semantic check only when a verdict is read
};

inline constexpr std::size_t default_formula_ceiling = 100000;

struct ProgressionLimits {
  std::size_t max_formula_size = default_formula_ceiling;
  std::size_t max_nodes = default_node_budget;
};

/// One progression step: the formula the rest of the trace must satisfy
/// after reading s. No simplification is applied.
Formula step(const Formula& f, const State& s);

/// Bottom-up propositional cleanup: double negation, units and zeros of
/// And/Or with true and !true, and idempotence on structurally equal
/// operands. !true is the canonical false and stays as is.
Formula simplify_local(const Formula& f);

/// true if f is valid, !true if f is unsatisfiable, otherwise
/// simplify_local(f).
Formula collapse(const Formula& f, const Alphabet& alph, std::size_t max_nodes = default_node_budget);

/// Left fold of step over t, simplifying after each step per policy. On the
/// empty trace returns f, collapsed first only under SemanticPerStep.
/// Throws BudgetExceeded when a residual outgrows limits.max_formula_size.
Formula run(const Formula& f, const FiniteTrace& t, SimplifyPolicy policy, const Alphabet& alph,
            const ProgressionLimits& limits = {});

/// T if residual is valid, F if it is unsatisfiable, otherwise Unknown.
Verdict semantic_verdict(const Formula& residual, const Alphabet& alph,
                         std::size_t max_nodes = default_node_budget);

/// T only for the literal true, F only for the literal !true. This is the
/// purely syntactic reading, which is incomplete without semantic collapse.
Verdict syntactic_verdict(const Formula& residual);

/// Verdict of f on t by progression: run under policy, then judge the
/// residual semantically. The policy affects cost, never the answer.
Verdict verdict_progression(const Formula& f, const FiniteTrace& t, const Alphabet& alph,
                            SimplifyPolicy policy = SimplifyPolicy::SemanticFinal,
                            const ProgressionLimits& limits = {});

/// Memo of semantic_verdict keyed by structural formula equality. Residuals
/// recur constantly during monitoring, so the automata behind each distinct
/// residual are built once.
class ResidualVerdictCache {
public:
  explicit ResidualVerdictCache(Alphabet alph, std::size_t max_nodes = default_node_budget,
                                std::size_t max_entries = 1u << 20)
      : alph_(std::move(alph)), max_nodes_(max_nodes), max_entries_(max_entries) {}

  Verdict get(const Formula& residual);
  const Alphabet& alphabet() const noexcept { return alph_; }
  std::size_t size() const noexcept { return memo_.size(); }

private:
  Alphabet alph_;
  std::size_t max_nodes_;
  std::size_t max_entries_;
  std::unordered_map<Formula, Verdict> memo_;
};

} // namespace ltl3
