#pragma once

// Small directed-graph helpers shared by the automaton code.

#include <cstddef>
#include <vector>

namespace ltl3::detail {

using Adjacency = std::vector<std::vector<int>>;

/// Tarjan's algorithm, iterative. Returns the component id of every vertex;
/// components are numbered in reverse topological order.
std::vector<int> strongly_connected_components(const Adjacency& adj, int& component_count);

/// A component is cyclic when it has more than one vertex or a self-loop.
std::vector<char> cyclic_components(const Adjacency& adj, const std::vector<int>& comp,
                                    int component_count);

/// Vertices that can reach some vertex with target[v] set (targets included).
std::vector<char> can_reach(const Adjacency& adj, const std::vector<char>& target);

/// Vertices reachable from the given sources (sources included).
std::vector<char> reachable_from(const Adjacency& adj, const std::vector<int>& sources);

/// Shortest path (vertex list, both ends included) from any source to a
/// vertex satisfying goal, restricted to vertices allowed[v]. Empty if none.
std::vector<int> shortest_path(const Adjacency& adj, const std::vector<int>& sources,
                               const std::vector<char>& goal, const std::vector<char>* allowed = nullptr);

} // namespace ltl3::detail
