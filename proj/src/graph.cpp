#include "graph.hpp"

#include <algorithm>
#include <deque>

namespace ltl3::detail {

std::vector<int> strongly_connected_components(const Adjacency& adj, int& component_count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(adj.size(), -1), low(adj.size(), 0), comp(adj.size(), -1);
  std::vector<char> on_stack(adj.size(), 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call; // vertex, next edge to explore
  int counter = 0;
  component_count = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1)
      continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < adj[v].size()) {
        const int w = adj[v][edge++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = component_count;
        } while (w != v);
        ++component_count;
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

std::vector<char> cyclic_components(const Adjacency& adj, const std::vector<int>& comp,
                                    int component_count) {
  std::vector<int> members(static_cast<std::size_t>(component_count), 0);
  std::vector<char> cyclic(static_cast<std::size_t>(component_count), 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    ++members[comp[v]];
    for (int w : adj[v])
      if (w == static_cast<int>(v))
        cyclic[comp[v]] = 1;
  }
  for (int c = 0; c < component_count; ++c)
    if (members[c] > 1)
      cyclic[c] = 1;
  return cyclic;
}

std::vector<char> can_reach(const Adjacency& adj, const std::vector<char>& target) {
  Adjacency rev(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (int w : adj[v])
      rev[w].push_back(static_cast<int>(v));
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> work;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (target[v]) {
      seen[v] = 1;
      work.push_back(static_cast<int>(v));
    }
  while (!work.empty()) {
    const int v = work.back();
    work.pop_back();
    for (int u : rev[v])
      if (!seen[u]) {
        seen[u] = 1;
        work.push_back(u);
      }
  }
  return seen;
}

std::vector<char> reachable_from(const Adjacency& adj, const std::vector<int>& sources) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> work;
  for (int s : sources)
    if (!seen[s]) {
      seen[s] = 1;
      work.push_back(s);
    }
  while (!work.empty()) {
    const int v = work.back();
    work.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        work.push_back(w);
      }
  }
  return seen;
}

std::vector<int> shortest_path(const Adjacency& adj, const std::vector<int>& sources,
                               const std::vector<char>& goal, const std::vector<char>* allowed) {
  std::vector<int> parent(adj.size(), -2);
  std::deque<int> queue;
  for (int s : sources) {
    if (allowed && !(*allowed)[s])
      continue;
    if (parent[s] == -2) {
      parent[s] = -1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (goal[v]) {
      std::vector<int> path;
      for (int x = v; x != -1; x = parent[x])
        path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : adj[v]) {
      if (allowed && !(*allowed)[w])
        continue;
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

} // namespace ltl3::detail
