#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace ltl3 {

/// A state: the set of propositions that hold in it.
class State {
public:
  State() = default;
  State(std::initializer_list<std::string> true_props);
  explicit State(std::vector<std::string> true_props);

  bool contains(const std::string& prop) const;
  const std::vector<std::string>& props() const noexcept { return props_; }
  bool empty() const noexcept { return props_.empty(); }

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

private:
  std::vector<std::string> props_; // sorted, unique
};

std::ostream& operator<<(std::ostream& os, const State& s);

/// An ordered set of propositions A. The state space is the whole powerset,
/// indexed by bitmask: bit i set means props()[i] holds.
class Alphabet {
public:
  static constexpr std::size_t max_props = 30;

  Alphabet() = default;
  Alphabet(std::initializer_list<std::string> props);
  explicit Alphabet(std::vector<std::string> props);
  explicit Alphabet(const std::set<std::string>& props);

  const std::vector<std::string>& props() const noexcept { return props_; }
  std::size_t size() const noexcept { return props_.size(); }
  /// Number of states, 2^size().
  std::uint32_t letter_count() const noexcept { return std::uint32_t{1} << props_.size(); }

  std::optional<std::size_t> index_of(const std::string& prop) const;
  bool contains(const std::string& prop) const { return index_of(prop).has_value(); }
  bool covers(const std::set<std::string>& props) const;

  /// Bitmask of s. Throws AlphabetError if s holds a foreign proposition.
  std::uint32_t letter(const State& s) const;
  State state(std::uint32_t letter) const;
  /// Every state in letter order.
  std::vector<State> states() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> props_; // sorted, unique
};

std::ostream& operator<<(std::ostream& os, const Alphabet& a);

/// A finite trace; the empty vector is the empty trace.
using FiniteTrace = std::vector<State>;

/// The ultimately periodic infinite trace stem . loop . loop . ...
class LassoTrace {
public:
  /// Throws DomainError when loop is empty.
  LassoTrace(FiniteTrace stem, FiniteTrace loop);

  const FiniteTrace& stem() const noexcept { return stem_; }
  const FiniteTrace& loop() const noexcept { return loop_; }
  /// Number of distinct positions: |stem| + |loop|.
  std::size_t positions() const noexcept { return stem_.size() + loop_.size(); }
  /// Successor position on the finite position graph (the loop back-edge
  /// returns to |stem|).
  std::size_t successor(std::size_t pos) const noexcept {
    return pos + 1 < positions() ? pos + 1 : stem_.size();
  }

  /// Structural equality (same stem, same loop).
  friend bool operator==(const LassoTrace&, const LassoTrace&) = default;

private:
  FiniteTrace stem_;
  FiniteTrace loop_;
};

std::ostream& operator<<(std::ostream& os, const FiniteTrace& t);
std::ostream& operator<<(std::ostream& os, const LassoTrace& t);

/// t without its first n states; empty once n >= |t|.
FiniteTrace drop(const FiniteTrace& t, std::size_t n);

/// Drops n states from the denoted infinite trace. Consumes the stem first;
/// beyond it the loop is rotated and the stem is left empty.
LassoTrace drop(const LassoTrace& t, std::size_t n);

/// Throws std::out_of_range when i >= |t|.
const State& state_at(const FiniteTrace& t, std::size_t i);
const State& state_at(const LassoTrace& t, std::size_t i);

/// First k states of the denoted infinite trace.
FiniteTrace unroll(const LassoTrace& t, std::size_t k);

/// s . t
LassoTrace prepend(const State& s, const LassoTrace& t);

/// Denotational equality, decided on a prefix long enough to cover both
/// stems plus a common period.
bool same_infinite_trace(const LassoTrace& a, const LassoTrace& b);

/// Throws AlphabetError unless every state of t is over alph.
void check_trace(const Alphabet& alph, const FiniteTrace& t);
void check_trace(const Alphabet& alph, const LassoTrace& t);

} // namespace ltl3
