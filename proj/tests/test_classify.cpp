#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltl3/classify.hpp"
#include "ltl3/generate.hpp"
#include "ltl3/oracle.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace ltl3;
using th::F;

namespace {

constexpr Verdict TT = Verdict::True;
constexpr Verdict FF = Verdict::False;
constexpr Verdict UU = Verdict::Unknown;

Classification classify(const char* text) {
  const Formula f = F(text);
  return classify_all(f, Alphabet(props(f)));
}

/// No prefix of t up to the point where the monitor must have cycled has
/// verdict v.
bool no_prefix_with(const VerdictOracle& o, const MonitorAutomaton& m, const LassoTrace& t, Verdict v) {
  const std::size_t horizon = t.stem().size() + t.loop().size() * (m.state_count() + 1);
  auto p = o.start();
  for (std::size_t k = 0;; ++k) {
    if (VerdictOracle::verdict_at(p) == v)
      return false;
    if (k == horizon)
      return true;
    p = o.advance(p, state_at(t, k));
  }
}

/// Every extension of t of length <= depth is still undecided.
bool ugly(const VerdictOracle& o, const FiniteTrace& t, std::size_t depth) {
  for (const auto& u : enumerate_traces(o.alphabet(), depth)) {
    FiniteTrace tu = t;
    tu.insert(tu.end(), u.begin(), u.end());
    if (o.verdict(tu) != UU)
      return false;
  }
  return true;
}

void check_witnesses(const Formula& f, const Alphabet& alph, const Classification& c) {
  const VerdictOracle o(f, alph);
  const auto m = build_monitor(f, alph);
  if (!c.liveness.holds) {
    REQUIRE(c.liveness.prefix);
    REQUIRE(o.verdict(*c.liveness.prefix) == FF);
  }
  if (!c.co_liveness.holds) {
    REQUIRE(c.co_liveness.prefix);
    REQUIRE(o.verdict(*c.co_liveness.prefix) == TT);
  }
  if (!c.monitorable.holds) {
    REQUIRE(c.monitorable.prefix);
    REQUIRE(ugly(o, *c.monitorable.prefix, 3));
  }
  if (!c.co_safety.holds) {
    REQUIRE(c.co_safety.lasso);
    REQUIRE(oracle::holds(*c.co_safety.lasso, f));
    REQUIRE(no_prefix_with(o, m, *c.co_safety.lasso, TT));
  }
  if (!c.safety.holds) {
    REQUIRE(c.safety.lasso);
    REQUIRE_FALSE(oracle::holds(*c.safety.lasso, f));
    REQUIRE(no_prefix_with(o, m, *c.safety.lasso, FF));
  }
}

} // namespace

TEST_CASE("liveness") {
  CHECK(is_liveness(F("G F p"), Alphabet{"p"}).holds);
  CHECK(is_liveness(F("G(r -> F a)"), Alphabet{"a", "r"}).holds);
  const auto gp = is_liveness(F("G p"), Alphabet{"p"});
  CHECK_FALSE(gp.holds);
  REQUIRE(gp.prefix);
  CHECK(verdict_oracle(F("G p"), *gp.prefix, Alphabet{"p"}) == FF);
}

TEST_CASE("co-liveness") {
  CHECK_FALSE(is_co_liveness(F("F p"), Alphabet{"p"}).holds);
  CHECK(is_co_liveness(F("G F p"), Alphabet{"p"}).holds);
  CHECK(is_co_liveness(F("false"), Alphabet{}).holds);
}

TEST_CASE("co-safety and safety") {
  CHECK(is_co_safety(F("F p"), Alphabet{"p"}).holds);
  CHECK_FALSE(is_co_safety(F("G p"), Alphabet{"p"}).holds);
  CHECK(is_co_safety(F("true"), Alphabet{}).holds);
  CHECK(is_safety(F("G p"), Alphabet{"p"}).holds);
  CHECK_FALSE(is_safety(F("F p"), Alphabet{"p"}).holds);
  CHECK(is_safety(F("true"), Alphabet{}).holds);
}

TEST_CASE("monitorability") {
  CHECK(is_monitorable(F("((p | q) U r) | G p"), Alphabet{"p", "q", "r"}).holds);
  CHECK_FALSE(is_monitorable(F("G F p"), Alphabet{"p"}).holds);
  CHECK(is_monitorable(F("p U q"), Alphabet{"p", "q"}).holds);
  // Not monitorable although some prefixes are definitive.
  const auto m = is_monitorable(F("a | G F p"), Alphabet{"a", "p"});
  CHECK_FALSE(m.holds);
  REQUIRE(m.prefix);
  CHECK_FALSE(m.prefix->empty());
}

TEST_CASE("classification table") {
  CHECK(summary(classify("G p")) == "safety=true cosafety=false liveness=false coliveness=true monitorable=true");
  CHECK(summary(classify("F p")) == "safety=false cosafety=true liveness=true coliveness=false monitorable=true");
  CHECK(summary(classify("G F p")) == "safety=false cosafety=false liveness=true coliveness=true monitorable=false");
  CHECK(classify("((p|q) U r) | G p").monitorable.holds);
  CHECK(summary(classify("G(r -> F a)")) ==
        "safety=false cosafety=false liveness=true coliveness=true monitorable=false");
  CHECK(summary(classify("true")) == "safety=true cosafety=true liveness=true coliveness=false monitorable=true");
  CHECK(summary(classify("false")) == "safety=true cosafety=true liveness=false coliveness=true monitorable=true");
}

TEST_CASE("classification is consistent with the oracle over the corpus") {
  const Alphabet alph{"p", "q"};
  const auto traces = enumerate_traces(alph, 4);
  const auto lassos = enumerate_lassos(alph, 2, 2);
  for (const auto& f : enumerate_formulas(5, alph.props())) {
    const auto c = classify_all(f, alph);
    check_witnesses(f, alph, c);

    const VerdictOracle o(f, alph);
    const auto m = build_monitor(f, alph);
    bool any_f = false, any_t = false;
    for (const auto& t : traces) {
      const Verdict v = o.verdict(t);
      any_f |= v == FF;
      any_t |= v == TT;
    }
    if (c.liveness.holds)
      REQUIRE_FALSE(any_f);
    if (c.co_liveness.holds)
      REQUIRE_FALSE(any_t);
    // Every satisfying (violating) lasso of a co-safety (safety) property
    // has a good (bad) prefix.
    for (const auto& t : lassos) {
      const bool satisfied = oracle::holds(t, f);
      if (c.co_safety.holds && satisfied)
        REQUIRE_FALSE(no_prefix_with(o, m, t, TT));
      if (c.safety.holds && !satisfied)
        REQUIRE_FALSE(no_prefix_with(o, m, t, FF));
    }

    const auto n = classify_all(lnot(f), alph);
    REQUIRE(c.safety.holds == n.co_safety.holds);
    REQUIRE(c.liveness.holds == n.co_liveness.holds);
    REQUIRE(c.monitorable.holds == n.monitorable.holds);
    if (c.safety.holds || c.co_safety.holds)
      REQUIRE(c.monitorable.holds);
    if (c.safety.holds && c.liveness.holds)
      REQUIRE((!sat(lnot(f), alph)));
  }
}
