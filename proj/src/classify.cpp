#include "ltl3/classify.hpp"

#include "graph.hpp"

#include <algorithm>
#include <map>

namespace ltl3 {
namespace {

struct LabelledGraph {
  detail::Adjacency adj;
  std::vector<std::vector<std::uint32_t>> letter; // parallel to adj

  std::uint32_t label(int from, int to) const {
    const auto& out = adj[static_cast<std::size_t>(from)];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i] == to)
        return letter[static_cast<std::size_t>(from)][i];
    return 0;
  }

  FiniteTrace word(const std::vector<int>& path, const Alphabet& alph) const {
    FiniteTrace out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      out.push_back(alph.state(label(path[i], path[i + 1])));
    return out;
  }
};

LabelledGraph monitor_graph(const MonitorAutomaton& m) {
  LabelledGraph g;
  g.adj.resize(m.state_count());
  g.letter.resize(m.state_count());
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    for (std::uint32_t l = 0; l < m.alphabet().letter_count(); ++l) {
      const int t = m.next(static_cast<int>(q), l);
      if (std::find(g.adj[q].begin(), g.adj[q].end(), t) == g.adj[q].end()) {
        g.adj[q].push_back(t);
        g.letter[q].push_back(l);
      }
    }
  }
  return g;
}

/// Reachability of a monitor state with the given verdict; the witness is
/// the shortest prefix reaching one.
Decision never_reaches(const MonitorAutomaton& m, Verdict v) {
  const auto g = monitor_graph(m);
  std::vector<char> goal(m.state_count(), 0);
  for (std::size_t q = 0; q < m.state_count(); ++q)
    goal[q] = m.verdict(static_cast<int>(q)) == v;
  const auto path = detail::shortest_path(g.adj, {m.initial()}, goal);
  if (path.empty())
    return {};
  return {false, g.word(path, m.alphabet()), std::nullopt};
}

/// Looks for an infinite run of the automaton for f along which the monitor
/// never shows `avoid`. Such a run is a lasso in f's language without a
/// prefix carrying that verdict.
Decision no_run_avoiding(const Gba& gba, const MonitorAutomaton& m, Verdict avoid) {
  if (m.verdict(m.initial()) == avoid)
    return {};

  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> vertices;
  LabelledGraph g;
  auto vertex = [&](int node, int q) {
    auto [it, fresh] = ids.emplace(std::make_pair(node, q), static_cast<int>(vertices.size()));
    if (fresh) {
      vertices.emplace_back(node, q);
      g.adj.emplace_back();
      g.letter.emplace_back();
    }
    return it->second;
  };
  std::vector<int> sources;
  for (int n : gba.initial())
    sources.push_back(vertex(n, m.initial()));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto [n, q] = vertices[v];
    for (std::uint32_t l = 0; l < m.alphabet().letter_count(); ++l) {
      if (!gba.admits(n, l))
        continue;
      const int q2 = m.next(q, l);
      if (m.verdict(q2) == avoid)
        continue;
      for (int n2 : gba.node(n).successors) {
        const int w = vertex(n2, q2);
        auto& out = g.adj[v];
        if (std::find(out.begin(), out.end(), w) == out.end()) {
          out.push_back(w);
          g.letter[v].push_back(l);
        }
      }
    }
  }

  int count = 0;
  const auto comp = detail::strongly_connected_components(g.adj, count);
  const auto cyclic = detail::cyclic_components(g.adj, comp, count);
  const std::size_t acc_count = gba.acceptance_count();
  std::vector<boost::dynamic_bitset<>> seen(static_cast<std::size_t>(count),
                                            boost::dynamic_bitset<>(acc_count));
  for (std::size_t v = 0; v < vertices.size(); ++v)
    seen[comp[v]] |= gba.node(vertices[v].first).accepting;
  std::vector<char> good(vertices.size(), 0);
  for (std::size_t v = 0; v < vertices.size(); ++v)
    good[v] = cyclic[comp[v]] && seen[comp[v]].all();

  const auto stem_path = detail::shortest_path(g.adj, sources, good);
  if (stem_path.empty())
    return {};

  // Close a cycle through the accepting component that touches every
  // acceptance set and returns to the entry vertex.
  const int entry = stem_path.back();
  std::vector<char> in_comp(vertices.size(), 0);
  for (std::size_t v = 0; v < vertices.size(); ++v)
    in_comp[v] = comp[v] == comp[entry];

  std::vector<int> cycle{entry};
  boost::dynamic_bitset<> covered = gba.node(vertices[entry].first).accepting;
  for (std::size_t k = 0; k < acc_count; ++k) {
    if (covered.test(k))
      continue;
    std::vector<char> goal(vertices.size(), 0);
    for (std::size_t v = 0; v < vertices.size(); ++v)
      goal[v] = in_comp[v] && gba.node(vertices[v].first).accepting.test(k);
    const auto leg = detail::shortest_path(g.adj, {cycle.back()}, goal, &in_comp);
    for (std::size_t i = 1; i < leg.size(); ++i) {
      cycle.push_back(leg[i]);
      covered |= gba.node(vertices[leg[i]].first).accepting;
    }
  }
  // Return to the entry with at least one edge.
  std::vector<char> back(vertices.size(), 0);
  back[entry] = 1;
  std::vector<int> starts;
  for (int w : g.adj[cycle.back()])
    if (in_comp[w])
      starts.push_back(w);
  auto home = detail::shortest_path(g.adj, starts, back, &in_comp);
  cycle.insert(cycle.end(), home.begin(), home.end());

  const Alphabet& alph = m.alphabet();
  return {false, std::nullopt, LassoTrace(g.word(stem_path, alph), g.word(cycle, alph))};
}

} // namespace

Decision is_liveness(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits) {
  return never_reaches(build_monitor(f, alph, limits.max_monitor_states, limits.max_nodes),
                       Verdict::False);
}

Decision is_co_liveness(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits) {
  return never_reaches(build_monitor(f, alph, limits.max_monitor_states, limits.max_nodes),
                       Verdict::True);
}

Decision is_co_safety(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits) {
  const auto m = build_monitor(f, alph, limits.max_monitor_states, limits.max_nodes);
  const auto gba = to_buchi(f, alph, limits.max_nodes);
  return no_run_avoiding(gba, m, Verdict::True);
}

Decision is_safety(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits) {
  return is_co_safety(lnot(f), alph, limits);
}

Decision is_monitorable(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits) {
  const auto m = build_monitor(f, alph, limits.max_monitor_states, limits.max_nodes);
  const auto g = monitor_graph(m);
  std::vector<char> definitive(m.state_count(), 0);
  for (std::size_t q = 0; q < m.state_count(); ++q)
    definitive[q] = m.verdict(static_cast<int>(q)) != Verdict::Unknown;
  const auto hopeful = detail::can_reach(g.adj, definitive);
  std::vector<char> ugly(m.state_count(), 0);
  for (std::size_t q = 0; q < m.state_count(); ++q)
    ugly[q] = !hopeful[q];
  const auto path = detail::shortest_path(g.adj, {m.initial()}, ugly);
  if (path.empty())
    return {};
  return {false, g.word(path, alph), std::nullopt};
}

Classification classify_all(const Formula& f, const Alphabet& alph, const ClassifyLimits& limits) {
  return {is_safety(f, alph, limits), is_co_safety(f, alph, limits), is_liveness(f, alph, limits),
          is_co_liveness(f, alph, limits), is_monitorable(f, alph, limits)};
}

std::string summary(const Classification& c) {
  auto b = [](const Decision& d) { return d.holds ? "true" : "false"; };
  return std::string("safety=") + b(c.safety) + " cosafety=" + b(c.co_safety) +
         " liveness=" + b(c.liveness) + " coliveness=" + b(c.co_liveness) +
         " monitorable=" + b(c.monitorable);
}

} // namespace ltl3
