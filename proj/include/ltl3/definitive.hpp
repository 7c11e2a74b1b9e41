#pragma once

#include "ltl3/trace.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace ltl3::definitive {

/// A finite stand-in for the trace universe: every sequence over an explicit
/// set of states of length at most the horizon N. Traces of length N are the
/// maximal ones and play the role of infinite traces; shorter traces play
/// the role of finite ones.
///
/// Traces are enumerated breadth first, so index 0 is the empty trace and
/// a trace's index is always larger than that of its prefixes.
class BoundedUniverse {
public:
  using Bits = boost::dynamic_bitset<>;

  /// Throws DomainError for horizon 0 or repeated states, BudgetExceeded
  /// when the universe would exceed max_traces.
  static std::shared_ptr<const BoundedUniverse> make(std::vector<State> states, std::size_t horizon,
                                                     std::size_t max_traces = std::size_t{1} << 20);

  const std::vector<State>& states() const noexcept { return states_; }
  std::size_t horizon() const noexcept { return horizon_; }
  std::size_t trace_count() const noexcept { return traces_.size(); }

  FiniteTrace trace(std::size_t index) const;
  std::size_t length(std::size_t index) const { return traces_[index].size(); }
  bool is_maximal(std::size_t index) const { return traces_[index].size() == horizon_; }
  std::optional<std::size_t> index_of(const FiniteTrace& t) const;

  /// Index of the trace without its first state (the empty trace maps to itself).
  std::size_t tail(std::size_t index) const { return tail_[index]; }
  /// The trace itself and all of its in-universe extensions.
  const Bits& extensions_of(std::size_t index) const { return ext_[index]; }
  /// The trace itself and all of its prefixes.
  const Bits& prefixes_of(std::size_t index) const { return pre_[index]; }

  bool same_as(const BoundedUniverse& other) const {
    return this == &other || (horizon_ == other.horizon_ && states_ == other.states_);
  }

private:
  BoundedUniverse() = default;

  std::vector<State> states_;
  std::size_t horizon_ = 0;
  std::vector<std::vector<std::size_t>> traces_; // state indices
  std::vector<std::size_t> tail_;
  std::vector<Bits> ext_;
  std::vector<Bits> pre_;
};

using UniversePtr = std::shared_ptr<const BoundedUniverse>;

/// An explicit set of traces drawn from one bounded universe.
class TraceSet {
public:
  using Bits = BoundedUniverse::Bits;

  TraceSet(UniversePtr universe, Bits members);

  static TraceSet none(UniversePtr u);
  static TraceSet all(UniversePtr u);
  /// All traces of length N.
  static TraceSet maximal(UniversePtr u);
  /// Throws DomainError for a trace outside the universe.
  static TraceSet of(UniversePtr u, const std::vector<FiniteTrace>& traces);
  /// The subset whose bit i (in universe order) is set in code.
  static TraceSet from_code(UniversePtr u, unsigned long long code);

  const UniversePtr& universe() const noexcept { return universe_; }
  const Bits& bits() const noexcept { return members_; }
  bool contains(std::size_t index) const { return members_.test(index); }
  bool contains(const FiniteTrace& t) const;
  std::size_t count() const { return members_.count(); }
  bool empty() const { return members_.none(); }
  std::vector<FiniteTrace> traces() const;

  bool subset_of(const TraceSet& other) const;

  friend bool operator==(const TraceSet& a, const TraceSet& b);
  friend TraceSet operator&(const TraceSet& a, const TraceSet& b);
  friend TraceSet operator|(const TraceSet& a, const TraceSet& b);

private:
  UniversePtr universe_;
  Bits members_;
};

/// Down-closure: every prefix of a member.
TraceSet prefixes(const TraceSet& x);
/// Up-closure: every in-universe extension of a member (members included).
TraceSet extensions(const TraceSet& x);
/// Traces all of whose extensions are prefixes of members.
TraceSet defprefixes(const TraceSet& x);
bool is_definitive(const TraceSet& x);
/// Definitive prefixes of the union. Throws DomainError on an empty
/// collection or mixed universes.
TraceSet dunion(const std::vector<TraceSet>& sets);
/// Restriction to maximal traces. Throws DomainError unless x is definitive.
TraceSet pr(const TraceSet& x);
/// Definitive closure of a property. Throws DomainError if p has a
/// non-maximal member.
TraceSet df(const TraceSet& p);
/// Traces whose tail lies in x; the empty trace is its own tail.
TraceSet prepend_set(const TraceSet& x);

} // namespace ltl3::definitive
