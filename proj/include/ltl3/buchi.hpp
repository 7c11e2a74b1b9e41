#pragma once

#include "ltl3/formula.hpp"
#include "ltl3/trace.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ltl3 {

/// Default ceiling on tableau nodes per automaton.
inline constexpr std::size_t default_node_budget = 20000;

/// Generalized Büchi automaton produced by the tableau construction.
///
/// Nodes are state-labelled: a node carries literal requirements on the
/// state read while the run sits in it, and the obligations it passes on
/// to the next position. A run over s0 s1 ... is a node sequence n0 n1 ...
/// starting in an initial node where each n_i admits s_i and n_{i+1} is a
/// successor of n_i. There is one acceptance set per Until subformula.
class Gba {
public:
  struct Node {
    std::vector<int> obligations;   // closure ids decomposed in this node
    std::uint32_t positive = 0;     // letter bits that must be set
    std::uint32_t negative = 0;     // letter bits that must be clear
    std::vector<int> next;          // closure ids owed from the next position
    std::vector<int> successors;
    boost::dynamic_bitset<> accepting; // bit k: member of acceptance set k
  };

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<int>& initial() const noexcept { return initial_; }
  std::size_t acceptance_count() const noexcept { return acceptance_.size(); }
  /// Node ids of acceptance set k.
  const std::vector<int>& acceptance(std::size_t k) const { return acceptance_.at(k); }

  bool admits(int id, std::uint32_t letter) const {
    const auto& n = nodes_[static_cast<std::size_t>(id)];
    return (letter & n.positive) == n.positive && (letter & n.negative) == 0;
  }
  /// Successors of id after reading s there; empty if id does not admit s.
  std::vector<int> transitions(int id, const State& s) const;
  /// All nodes reachable in one step from some node of from that admits letter.
  /// Sorted, without duplicates.
  std::vector<int> post(const std::vector<int>& from, std::uint32_t letter) const;

  /// An accepting run starts at id (computed once, by SCC analysis).
  bool live(int id) const { return live_[static_cast<std::size_t>(id)] != 0; }

  /// Closure formula text for display.
  const std::string& closure_text(int closure_id) const {
    return closure_text_.at(static_cast<std::size_t>(closure_id));
  }

private:
  friend Gba to_buchi(const Formula& f, const Alphabet& alph, std::size_t max_nodes);
  Gba() = default;

  Alphabet alphabet_;
  std::vector<Node> nodes_;
  std::vector<int> initial_;
  std::vector<std::vector<int>> acceptance_;
  std::vector<char> live_;
  std::vector<std::string> closure_text_;
};

/// Builds the automaton for f. Throws AlphabetError if f mentions a
/// proposition outside alph and BudgetExceeded past max_nodes nodes.
Gba to_buchi(const Formula& f, const Alphabet& alph, std::size_t max_nodes = default_node_budget);

/// Some run over t visits every acceptance set infinitely often.
bool accepts(const Gba& a, const LassoTrace& t);

/// No accepting run starts in any node of from. Throws DomainError for an
/// id outside the automaton.
bool is_empty(const Gba& a, const std::vector<int>& from);

bool sat(const Formula& f, const Alphabet& alph, std::size_t max_nodes = default_node_budget);
bool valid(const Formula& f, const Alphabet& alph, std::size_t max_nodes = default_node_budget);

/// GraphViz rendering; node labels list the decomposed obligations.
std::string to_dot(const Gba& a);

} // namespace ltl3
