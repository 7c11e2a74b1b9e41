#include "ltl3/progression.hpp"

#include "ltl3/error.hpp"
#include "ltl3/oracle.hpp"

namespace ltl3 {

Formula step(const Formula& f, const State& s) {
  switch (f.op()) {
  case Op::Top:
    return f;
  case Op::Atom:
    return s.contains(f.name()) ? top() : bottom();
  case Op::Not:
    return lnot(step(f.lhs(), s));
  case Op::And:
    return land(step(f.lhs(), s), step(f.rhs(), s));
  case Op::Or:
    return lor(step(f.lhs(), s), step(f.rhs(), s));
  case Op::Next:
    return f.lhs();
  case Op::Until:
    // a U b  ->  b' | (a' & (a U b))
    return lor(step(f.rhs(), s), land(step(f.lhs(), s), f));
  }
  return f;
}

Formula simplify_local(const Formula& f) {
  switch (f.op()) {
  case Op::Top:
  case Op::Atom:
    return f;
  case Op::Not: {
    Formula c = simplify_local(f.lhs());
    if (c.op() == Op::Not)
      return c.lhs();
    return c.same_node(f.lhs()) ? f : lnot(std::move(c));
  }
  case Op::And: {
    Formula a = simplify_local(f.lhs());
    Formula b = simplify_local(f.rhs());
    if (b.is_top())
      return a;
    if (a.is_top())
      return b;
    if (a.is_bottom() || b.is_bottom())
      return bottom();
    if (a == b)
      return a;
    return a.same_node(f.lhs()) && b.same_node(f.rhs()) ? f : land(std::move(a), std::move(b));
  }
  case Op::Or: {
    Formula a = simplify_local(f.lhs());
    Formula b = simplify_local(f.rhs());
    if (a.is_top() || b.is_top())
      return top();
    if (b.is_bottom())
      return a;
    if (a.is_bottom())
      return b;
    if (a == b)
      return a;
    return a.same_node(f.lhs()) && b.same_node(f.rhs()) ? f : lor(std::move(a), std::move(b));
  }
  case Op::Next: {
    Formula c = simplify_local(f.lhs());
    return c.same_node(f.lhs()) ? f : next(std::move(c));
  }
  case Op::Until: {
    Formula a = simplify_local(f.lhs());
    Formula b = simplify_local(f.rhs());
    return a.same_node(f.lhs()) && b.same_node(f.rhs()) ? f : until(std::move(a), std::move(b));
  }
  }
  return f;
}

Verdict semantic_verdict(const Formula& residual, const Alphabet& alph, std::size_t max_nodes) {
  const VerdictOracle oracle(residual, alph, max_nodes);
  return VerdictOracle::verdict_at(oracle.start());
}

Verdict syntactic_verdict(const Formula& residual) {
  if (residual.is_top())
    return Verdict::True;
  if (residual.is_bottom())
    return Verdict::False;
  return Verdict::Unknown;
}

namespace {

Formula collapse_with(const Formula& f, Verdict v) {
  switch (v) {
  case Verdict::True: return top();
  case Verdict::False: return bottom();
  default: return simplify_local(f);
  }
}

} // namespace

Formula collapse(const Formula& f, const Alphabet& alph, std::size_t max_nodes) {
  return collapse_with(f, semantic_verdict(f, alph, max_nodes));
}

Formula run(const Formula& f, const FiniteTrace& t, SimplifyPolicy policy, const Alphabet& alph,
            const ProgressionLimits& limits) {
  for (const auto& p : props(f))
    if (!alph.contains(p))
      throw AlphabetError("formula proposition '" + p + "' is not in the alphabet");
  check_trace(alph, t);

  Formula cur = f;
  if (policy == SimplifyPolicy::SemanticPerStep)
    cur = collapse(cur, alph, limits.max_nodes);
  for (const auto& s : t) {
    cur = simplify_local(step(cur, s));
    if (policy == SimplifyPolicy::SemanticPerStep)
      cur = collapse(cur, alph, limits.max_nodes);
    if (cur.size() > limits.max_formula_size)
      throw BudgetExceeded("progressed formula size " + std::to_string(cur.size()) + " exceeds " +
                           std::to_string(limits.max_formula_size));
  }
  return cur;
}

Verdict verdict_progression(const Formula& f, const FiniteTrace& t, const Alphabet& alph,
                            SimplifyPolicy policy, const ProgressionLimits& limits) {
  return semantic_verdict(run(f, t, policy, alph, limits), alph, limits.max_nodes);
}

Verdict ResidualVerdictCache::get(const Formula& residual) {
  if (auto it = memo_.find(residual); it != memo_.end())
    return it->second;
  const Verdict v = semantic_verdict(residual, alph_, max_nodes_);
  if (memo_.size() >= max_entries_)
    memo_.clear();
  memo_.emplace(residual, v);
  return v;
}

} // namespace ltl3
