#pragma once

#include "ltl3/buchi.hpp"
#include "ltl3/semantics.hpp"

#include <cstdint>
#include <vector>

namespace ltl3 {

/// Three-valued verdicts read straight off the definition: a prefix is T
/// when no infinite continuation satisfies !f, F when none satisfies f.
///
/// Holds the automata for f and !f so that many prefixes can be judged
/// without rebuilding them. Positions track the live nodes each automaton
/// can occupy after the prefix read so far.
class VerdictOracle {
public:
  struct Position {
    std::vector<int> positive; // live nodes of the automaton for f
    std::vector<int> negative; // live nodes of the automaton for !f
  };

  VerdictOracle(const Formula& f, const Alphabet& alph, std::size_t max_nodes = default_node_budget);

  const Alphabet& alphabet() const noexcept { return pos_.alphabet(); }
  const Gba& positive_automaton() const noexcept { return pos_; }
  const Gba& negative_automaton() const noexcept { return neg_; }

  /// Position after the empty trace.
  Position start() const;
  Position advance(const Position& p, std::uint32_t letter) const;
  Position advance(const Position& p, const State& s) const;
  static Verdict verdict_at(const Position& p);

  /// Throws AlphabetError if t has states outside the alphabet.
  Verdict verdict(const FiniteTrace& t) const;

private:
  Gba pos_;
  Gba neg_;
};

/// One-shot form of VerdictOracle::verdict.
Verdict verdict_oracle(const Formula& f, const FiniteTrace& t, const Alphabet& alph);

} // namespace ltl3
