#include "ltl3/buchi.hpp"

#include "ltl3/error.hpp"
#include "ltl3/nnf.hpp"

#include "graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace ltl3 {
namespace {

using K = NnfFormula::Kind;

struct Closure {
  struct Entry {
    K kind;
    std::uint32_t bit = 0;
    bool positive = true;
    int a = -1;
    int b = -1;
  };

  std::vector<Entry> entries;
  std::vector<std::string> text;
  std::vector<int> until_slot; // acceptance index per closure id, -1 if not an Until
  std::size_t until_count = 0;
  std::map<std::tuple<int, std::uint32_t, bool, int, int>, int> index;

  int intern(const NnfFormula& f, const Alphabet& alph) {
    Entry e{f.kind()};
    switch (f.kind()) {
    case K::True:
    case K::False:
      break;
    case K::Lit:
      e.bit = std::uint32_t{1} << *alph.index_of(f.prop());
      e.positive = f.positive();
      break;
    case K::Next:
      e.a = intern(f.lhs(), alph);
      break;
    default:
      e.a = intern(f.lhs(), alph);
      e.b = intern(f.rhs(), alph);
    }
    auto key = std::make_tuple(static_cast<int>(e.kind), e.bit, e.positive, e.a, e.b);
    auto [it, fresh] = index.emplace(key, static_cast<int>(entries.size()));
    if (fresh) {
      entries.push_back(e);
      text.push_back(to_string(f));
      until_slot.push_back(e.kind == K::Until ? static_cast<int>(until_count++) : -1);
    }
    return it->second;
  }
};

struct Expanded {
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;
  std::vector<int> next;
  std::vector<char> old;
};

/// Tableau expansion of a set of obligations into locally consistent covers.
class Expander {
public:
  explicit Expander(const Closure& c) : c_(c) {}

  std::vector<Expanded> run(const std::vector<int>& todo) {
    out_.clear();
    Expanded start;
    start.old.assign(c_.entries.size(), 0);
    expand(todo, std::move(start));
    return std::move(out_);
  }

private:
  void expand(std::vector<int> todo, Expanded st) {
    while (!todo.empty()) {
      const int g = todo.back();
      todo.pop_back();
      if (st.old[g])
        continue;
      st.old[g] = 1;
      const auto& e = c_.entries[g];
      switch (e.kind) {
      case K::True:
        break;
      case K::False:
        return;
      case K::Lit:
        if (e.positive) {
          if (st.negative & e.bit)
            return;
          st.positive |= e.bit;
        } else {
          if (st.positive & e.bit)
            return;
          st.negative |= e.bit;
        }
        break;
      case K::And:
        todo.push_back(e.a);
        todo.push_back(e.b);
        break;
      case K::Or: {
        auto alt = todo;
        alt.push_back(e.a);
        expand(std::move(alt), st);
        todo.push_back(e.b);
        break;
      }
      case K::Next:
        st.next.push_back(e.a);
        break;
      case K::Until: {
        // a U b = b | (a & X(a U b))
        auto alt = todo;
        alt.push_back(e.b);
        expand(std::move(alt), st);
        todo.push_back(e.a);
        st.next.push_back(g);
        break;
      }
      case K::Release: {
        // a R b = b & (a | X(a R b))
        auto alt = todo;
        alt.push_back(e.a);
        alt.push_back(e.b);
        expand(std::move(alt), st);
        todo.push_back(e.b);
        st.next.push_back(g);
        break;
      }
      }
    }
    std::sort(st.next.begin(), st.next.end());
    st.next.erase(std::unique(st.next.begin(), st.next.end()), st.next.end());
    out_.push_back(std::move(st));
  }

  const Closure& c_;
  std::vector<Expanded> out_;
};

bool accepting_component_exists(const detail::Adjacency& adj,
                                const std::vector<const boost::dynamic_bitset<>*>& acc,
                                std::size_t acc_count, std::vector<char>* live_out) {
  int count = 0;
  const auto comp = detail::strongly_connected_components(adj, count);
  const auto cyclic = detail::cyclic_components(adj, comp, count);
  std::vector<boost::dynamic_bitset<>> seen(static_cast<std::size_t>(count),
                                            boost::dynamic_bitset<>(acc_count));
  for (std::size_t v = 0; v < adj.size(); ++v)
    seen[comp[v]] |= *acc[v];
  std::vector<char> good(adj.size(), 0);
  bool any = false;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const int c = comp[v];
    if (cyclic[c] && seen[c].all()) {
      good[v] = 1;
      any = true;
    }
  }
  if (live_out)
    *live_out = detail::can_reach(adj, good);
  return any;
}

} // namespace

Gba to_buchi(const Formula& f, const Alphabet& alph, std::size_t max_nodes) {
  for (const auto& p : props(f))
    if (!alph.contains(p))
      throw AlphabetError("formula proposition '" + p + "' is not in the automaton alphabet");

  Closure closure;
  const int root = closure.intern(to_nnf(f), alph);
  Expander expander(closure);

  Gba g;
  g.alphabet_ = alph;
  g.acceptance_.resize(closure.until_count);

  using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<int>, std::vector<bool>>;
  std::map<Key, int> node_ids;
  std::map<std::vector<int>, std::vector<int>> expansions; // obligation set -> node ids

  auto nodes_for = [&](const std::vector<int>& obligations) -> std::vector<int> {
    if (auto it = expansions.find(obligations); it != expansions.end())
      return it->second;
    std::vector<int> ids;
    for (auto& ex : expander.run(obligations)) {
      std::vector<bool> acc(closure.until_count, true);
      for (std::size_t c = 0; c < closure.entries.size(); ++c) {
        const int slot = closure.until_slot[c];
        if (slot >= 0 && ex.old[c] && !ex.old[closure.entries[c].b])
          acc[slot] = false;
      }
      Key key{ex.positive, ex.negative, ex.next, acc};
      auto [it, fresh] = node_ids.emplace(key, static_cast<int>(g.nodes_.size()));
      if (fresh) {
        if (g.nodes_.size() >= max_nodes)
          throw BudgetExceeded("Büchi construction exceeded " + std::to_string(max_nodes) + " nodes");
        Gba::Node n;
        for (std::size_t c = 0; c < ex.old.size(); ++c)
          if (ex.old[c])
            n.obligations.push_back(static_cast<int>(c));
        n.positive = ex.positive;
        n.negative = ex.negative;
        n.next = ex.next;
        n.accepting.resize(closure.until_count);
        for (std::size_t k = 0; k < acc.size(); ++k)
          if (acc[k])
            n.accepting.set(k);
        g.nodes_.push_back(std::move(n));
      }
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    expansions.emplace(obligations, ids);
    return ids;
  };

  g.initial_ = nodes_for({root});
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    auto next = g.nodes_[i].next;
    auto succ = nodes_for(next);
    g.nodes_[i].successors = std::move(succ);
  }

  for (std::size_t i = 0; i < g.nodes_.size(); ++i)
    for (std::size_t k = 0; k < closure.until_count; ++k)
      if (g.nodes_[i].accepting.test(k))
        g.acceptance_[k].push_back(static_cast<int>(i));

  detail::Adjacency adj(g.nodes_.size());
  std::vector<const boost::dynamic_bitset<>*> acc(g.nodes_.size());
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    adj[i] = g.nodes_[i].successors;
    acc[i] = &g.nodes_[i].accepting;
  }
  accepting_component_exists(adj, acc, closure.until_count, &g.live_);
  g.closure_text_ = std::move(closure.text);
  return g;
}

std::vector<int> Gba::transitions(int id, const State& s) const {
  if (!admits(id, alphabet_.letter(s)))
    return {};
  return nodes_.at(static_cast<std::size_t>(id)).successors;
}

std::vector<int> Gba::post(const std::vector<int>& from, std::uint32_t letter) const {
  std::vector<int> out;
  for (int id : from)
    if (admits(id, letter)) {
      const auto& s = nodes_[static_cast<std::size_t>(id)].successors;
      out.insert(out.end(), s.begin(), s.end());
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_empty(const Gba& a, const std::vector<int>& from) {
  for (int id : from) {
    if (id < 0 || static_cast<std::size_t>(id) >= a.node_count())
      throw DomainError("node id " + std::to_string(id) + " is not in the automaton");
    if (a.live(id))
      return false;
  }
  return true;
}

bool accepts(const Gba& a, const LassoTrace& t) {
  check_trace(a.alphabet(), t);
  const std::size_t positions = t.positions();
  std::vector<std::uint32_t> letters(positions);
  for (std::size_t i = 0; i < positions; ++i)
    letters[i] = a.alphabet().letter(state_at(t, i));

  // Product of automaton nodes with lasso positions; a vertex (n, i) means
  // the run sits in n while reading position i.
  std::map<std::pair<int, std::size_t>, int> ids;
  std::vector<std::pair<int, std::size_t>> vertices;
  detail::Adjacency adj;
  auto vertex = [&](int n, std::size_t i) {
    auto [it, fresh] = ids.emplace(std::make_pair(n, i), static_cast<int>(vertices.size()));
    if (fresh) {
      vertices.emplace_back(n, i);
      adj.emplace_back();
    }
    return it->second;
  };
  for (int n : a.initial())
    if (a.admits(n, letters[0]))
      vertex(n, 0);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto [n, i] = vertices[v];
    const std::size_t j = t.successor(i);
    for (int m : a.node(n).successors)
      if (a.admits(m, letters[j])) {
        const int w = vertex(m, j);
        adj[v].push_back(w);
      }
  }
  std::vector<const boost::dynamic_bitset<>*> acc(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    acc[v] = &a.node(vertices[v].first).accepting;
  return accepting_component_exists(adj, acc, a.acceptance_count(), nullptr);
}

bool sat(const Formula& f, const Alphabet& alph, std::size_t max_nodes) {
  const Gba g = to_buchi(f, alph, max_nodes);
  return !is_empty(g, g.initial());
}

bool valid(const Formula& f, const Alphabet& alph, std::size_t max_nodes) {
  return !sat(lnot(f), alph, max_nodes);
}

std::string to_dot(const Gba& a) {
  std::ostringstream os;
  os << "digraph gba {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    const auto& n = a.node(static_cast<int>(i));
    os << "  n" << i << " [label=\"";
    for (std::size_t k = 0; k < n.obligations.size(); ++k)
      os << (k ? ", " : "") << a.closure_text(n.obligations[k]);
    os << "\\nacc:";
    for (std::size_t k = 0; k < n.accepting.size(); ++k)
      if (n.accepting.test(k))
        os << ' ' << k;
    os << "\"" << (a.live(static_cast<int>(i)) ? "" : ", style=dashed") << "];\n";
  }
  for (int i : a.initial())
    os << "  init -> n" << i << ";\n";
  for (std::size_t i = 0; i < a.node_count(); ++i)
    for (int j : a.node(static_cast<int>(i)).successors)
      os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace ltl3
