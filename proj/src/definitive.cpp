#include "ltl3/definitive.hpp"

#include "ltl3/error.hpp"

#include <algorithm>
#include <map>

namespace ltl3::definitive {

std::shared_ptr<const BoundedUniverse> BoundedUniverse::make(std::vector<State> states,
                                                             std::size_t horizon,
                                                             std::size_t max_traces) {
  if (horizon == 0)
    throw DomainError("bounded universe needs horizon >= 1");
  {
    auto sorted = states;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("bounded universe states must be distinct");
  }

  std::shared_ptr<BoundedUniverse> u(new BoundedUniverse());
  u->states_ = std::move(states);
  u->horizon_ = horizon;

  const std::size_t k = u->states_.size();
  std::vector<std::size_t> parent{0};
  u->traces_.push_back({});
  for (std::size_t i = 0; i < u->traces_.size(); ++i) {
    if (u->traces_[i].size() == horizon)
      continue;
    for (std::size_t s = 0; s < k; ++s) {
      if (u->traces_.size() >= max_traces)
        throw BudgetExceeded("bounded universe exceeds " + std::to_string(max_traces) + " traces");
      auto t = u->traces_[i];
      t.push_back(s);
      u->traces_.push_back(std::move(t));
      parent.push_back(i);
    }
  }

  const std::size_t n = u->traces_.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(u->traces_[i], i);

  u->tail_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = u->traces_[i];
    u->tail_[i] = t.empty() ? 0 : index.at(std::vector<std::size_t>(t.begin() + 1, t.end()));
  }

  u->pre_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 0)
      u->pre_[i] = u->pre_[parent[i]];
    u->pre_[i].set(i);
  }
  // Children have larger indices than parents, so a reverse sweep completes
  // each extension set before its parent absorbs it.
  u->ext_.assign(n, Bits(n));
  for (std::size_t i = n; i-- > 0;) {
    u->ext_[i].set(i);
    if (i != 0)
      u->ext_[parent[i]] |= u->ext_[i];
  }
  return u;
}

FiniteTrace BoundedUniverse::trace(std::size_t index) const {
  FiniteTrace out;
  for (auto s : traces_.at(index))
    out.push_back(states_[s]);
  return out;
}

std::optional<std::size_t> BoundedUniverse::index_of(const FiniteTrace& t) const {
  if (t.size() > horizon_)
    return std::nullopt;
  std::vector<std::size_t> ids;
  for (const auto& s : t) {
    auto it = std::find(states_.begin(), states_.end(), s);
    if (it == states_.end())
      return std::nullopt;
    ids.push_back(static_cast<std::size_t>(it - states_.begin()));
  }
  // Breadth-first layout: offset of the length block plus the base-k number.
  const std::size_t k = states_.size();
  std::size_t offset = 0;
  std::size_t block = 1;
  for (std::size_t len = 0; len < ids.size(); ++len) {
    offset += block;
    block *= k;
  }
  std::size_t rank = 0;
  for (auto id : ids)
    rank = rank * k + id;
  return offset + rank;
}

TraceSet::TraceSet(UniversePtr universe, Bits members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (!universe_)
    throw DomainError("trace set needs a universe");
  if (members_.size() != universe_->trace_count())
    throw DomainError("trace set bitset does not match its universe");
}

TraceSet TraceSet::none(UniversePtr u) {
  Bits b(u->trace_count());
  return TraceSet(std::move(u), std::move(b));
}

TraceSet TraceSet::all(UniversePtr u) {
  Bits b(u->trace_count());
  b.set();
  return TraceSet(std::move(u), std::move(b));
}

TraceSet TraceSet::maximal(UniversePtr u) {
  Bits b(u->trace_count());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (u->is_maximal(i))
      b.set(i);
  return TraceSet(std::move(u), std::move(b));
}

TraceSet TraceSet::of(UniversePtr u, const std::vector<FiniteTrace>& traces) {
  Bits b(u->trace_count());
  for (const auto& t : traces) {
    auto i = u->index_of(t);
    if (!i)
      throw DomainError("trace is not in the bounded universe");
    b.set(*i);
  }
  return TraceSet(std::move(u), std::move(b));
}

TraceSet TraceSet::from_code(UniversePtr u, unsigned long long code) {
  Bits b(u->trace_count());
  for (std::size_t i = 0; i < b.size() && i < 64; ++i)
    if (code & (1ULL << i))
      b.set(i);
  return TraceSet(std::move(u), std::move(b));
}

bool TraceSet::contains(const FiniteTrace& t) const {
  auto i = universe_->index_of(t);
  return i && members_.test(*i);
}

std::vector<FiniteTrace> TraceSet::traces() const {
  std::vector<FiniteTrace> out;
  for (auto i = members_.find_first(); i != Bits::npos; i = members_.find_next(i))
    out.push_back(universe_->trace(i));
  return out;
}

namespace {

void require_same(const TraceSet& a, const TraceSet& b) {
  if (!a.universe()->same_as(*b.universe()))
    throw DomainError("trace sets belong to different universes");
}

} // namespace

bool TraceSet::subset_of(const TraceSet& other) const {
  require_same(*this, other);
  return members_.is_subset_of(other.members_);
}

bool operator==(const TraceSet& a, const TraceSet& b) {
  return a.universe_->same_as(*b.universe_) && a.members_ == b.members_;
}

TraceSet operator&(const TraceSet& a, const TraceSet& b) {
  require_same(a, b);
  return TraceSet(a.universe_, a.members_ & b.members_);
}

TraceSet operator|(const TraceSet& a, const TraceSet& b) {
  require_same(a, b);
  return TraceSet(a.universe_, a.members_ | b.members_);
}

TraceSet prefixes(const TraceSet& x) {
  const auto& u = *x.universe();
  TraceSet::Bits out(u.trace_count());
  const auto& m = x.bits();
  for (auto i = m.find_first(); i != TraceSet::Bits::npos; i = m.find_next(i))
    out |= u.prefixes_of(i);
  return TraceSet(x.universe(), std::move(out));
}

TraceSet extensions(const TraceSet& x) {
  const auto& u = *x.universe();
  TraceSet::Bits out(u.trace_count());
  const auto& m = x.bits();
  for (auto i = m.find_first(); i != TraceSet::Bits::npos; i = m.find_next(i))
    out |= u.extensions_of(i);
  return TraceSet(x.universe(), std::move(out));
}

TraceSet defprefixes(const TraceSet& x) {
  const auto& u = *x.universe();
  const auto down = prefixes(x);
  TraceSet::Bits out(u.trace_count());
  for (std::size_t i = 0; i < u.trace_count(); ++i)
    if (u.extensions_of(i).is_subset_of(down.bits()))
      out.set(i);
  return TraceSet(x.universe(), std::move(out));
}

bool is_definitive(const TraceSet& x) { return defprefixes(x) == x; }

TraceSet dunion(const std::vector<TraceSet>& sets) {
  if (sets.empty())
    throw DomainError("definitive union of an empty collection has no universe");
  TraceSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i)
    acc = acc | sets[i];
  return defprefixes(acc);
}

TraceSet pr(const TraceSet& x) {
  if (!is_definitive(x))
    throw DomainError("pr expects a definitive set");
  return x & TraceSet::maximal(x.universe());
}

TraceSet df(const TraceSet& p) {
  if (!p.subset_of(TraceSet::maximal(p.universe())))
    throw DomainError("df expects a property: every member must be maximal");
  return defprefixes(p);
}

TraceSet prepend_set(const TraceSet& x) {
  const auto& u = *x.universe();
  TraceSet::Bits out(u.trace_count());
  for (std::size_t i = 0; i < u.trace_count(); ++i)
    if (x.contains(u.tail(i)))
      out.set(i);
  return TraceSet(x.universe(), std::move(out));
}

} // namespace ltl3::definitive
