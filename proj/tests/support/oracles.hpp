#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the value types, and favour transparency over speed.

#include "ltl3/formula.hpp"
#include "ltl3/semantics.hpp"
#include "ltl3/trace.hpp"

#include <set>
#include <vector>

namespace oracle {

/// Direct reading of the satisfaction relation at position 0 of a lasso.
/// Until searches forward through one full unrolling of the position graph.
bool holds(const ltl3::LassoTrace& t, const ltl3::Formula& f);

/// Verdict of f after u, judged by trying every continuation lasso with
/// |stem| <= max_stem and 1 <= |loop| <= max_loop. Sound for ?; for T and F
/// it is exact only when such short continuations are representative,
/// which holds for the small formulas it is used on.
ltl3::Verdict brute_verdict(const ltl3::Formula& f, const ltl3::FiniteTrace& u, const ltl3::Alphabet& alph,
                            std::size_t max_stem = 3, std::size_t max_loop = 2);

/// Finite universe with traces as plain vectors of state indices.
struct NaiveUniverse {
  using Trace = std::vector<int>;
  using Set = std::set<Trace>;

  int letters;
  std::size_t horizon;
  Set all;

  NaiveUniverse(int letters, std::size_t horizon);

  static bool is_prefix(const Trace& u, const Trace& t);
  Set down(const Set& x) const;
  Set up(const Set& x) const;
  Set defprefixes(const Set& x) const;
  Set maximal(const Set& x) const;
  Set prepend(const Set& x) const;
};

} // namespace oracle
