#include "ltl3/oracle.hpp"

namespace ltl3 {
namespace {

std::vector<int> live_only(const Gba& g, std::vector<int> ids) {
  std::erase_if(ids, [&](int id) { return !g.live(id); });
  return ids;
}

} // namespace

VerdictOracle::VerdictOracle(const Formula& f, const Alphabet& alph, std::size_t max_nodes)
    : pos_(to_buchi(f, alph, max_nodes)), neg_(to_buchi(lnot(f), alph, max_nodes)) {}

VerdictOracle::Position VerdictOracle::start() const {
  return {live_only(pos_, pos_.initial()), live_only(neg_, neg_.initial())};
}

VerdictOracle::Position VerdictOracle::advance(const Position& p, std::uint32_t letter) const {
  return {live_only(pos_, pos_.post(p.positive, letter)), live_only(neg_, neg_.post(p.negative, letter))};
}

VerdictOracle::Position VerdictOracle::advance(const Position& p, const State& s) const {
  return advance(p, alphabet().letter(s));
}

Verdict VerdictOracle::verdict_at(const Position& p) {
  if (p.negative.empty())
    return Verdict::True;
  if (p.positive.empty())
    return Verdict::False;
  return Verdict::Unknown;
}

Verdict VerdictOracle::verdict(const FiniteTrace& t) const {
  Position p = start();
  for (const auto& s : t)
    p = advance(p, s);
  return verdict_at(p);
}

Verdict verdict_oracle(const Formula& f, const FiniteTrace& t, const Alphabet& alph) {
  check_trace(alph, t);
  return VerdictOracle(f, alph).verdict(t);
}

} // namespace ltl3
