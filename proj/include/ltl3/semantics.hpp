#pragma once

#include "ltl3/formula.hpp"
#include "ltl3/trace.hpp"

#include <ostream>

namespace ltl3 {

/// Two-valued answer used to index answer families.
enum class Polarity { T, F };

/// Three-valued monitoring verdict. Unknown is printed as '?'.
enum class Verdict { True, False, Unknown };

inline Polarity flip(Polarity p) { return p == Polarity::T ? Polarity::F : Polarity::T; }

/// Exchanges True and False; Unknown is fixed.
inline Verdict swap(Verdict v) {
  switch (v) {
  case Verdict::True: return Verdict::False;
  case Verdict::False: return Verdict::True;
  default: return Verdict::Unknown;
  }
}

char to_char(Verdict v);
std::ostream& operator<<(std::ostream& os, Verdict v);

/// Satisfaction of f by the infinite trace t.
///
/// Each subformula is evaluated once over the |stem|+|loop| positions of the
/// lasso, innermost first; Until is the least fixpoint of its unfolding,
/// starting from all-false. Throws AlphabetError if f or t use propositions
/// outside alph.
bool eval_classic(const LassoTrace& t, const Formula& f, const Alphabet& alph);

/// Membership of t in the answer-indexed family of f at polarity pol.
///
/// Structural recursion carrying the polarity: negation flips it, And/Or
/// meet/join per polarity, Next recurses on the dropped trace, and Until
/// uses its existential form at T and the complement form at F. Kept
/// deliberately separate from eval_classic so the two can be compared.
bool eval_polar(const LassoTrace& t, const Formula& f, Polarity pol, const Alphabet& alph);

} // namespace ltl3
