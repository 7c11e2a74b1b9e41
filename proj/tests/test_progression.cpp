#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltl3/error.hpp"
#include "ltl3/generate.hpp"
#include "ltl3/oracle.hpp"
#include "ltl3/progression.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace ltl3;
using th::F;
using th::L;
using th::T;

namespace {
constexpr Verdict TT = Verdict::True;
constexpr Verdict FF = Verdict::False;
constexpr Verdict UU = Verdict::Unknown;
const auto all_policies = {SimplifyPolicy::LocalOnly, SimplifyPolicy::SemanticPerStep, SimplifyPolicy::SemanticFinal};
} // namespace

TEST_CASE("step rules") {
  CHECK(step(F("a"), State{"a"}) == top());
  CHECK(step(F("a"), State{}) == bottom());
  CHECK(step(F("X F a"), State{}) == F("F a"));
  CHECK(step(F("F a"), State{"a"}) == lor(top(), land(top(), F("F a"))));
  CHECK(step(F("true"), State{}) == top());
  CHECK(step(F("!a"), State{"a"}) == lnot(top()));
  CHECK(step(F("a & X b"), State{"a"}) == land(top(), F("b")));
  CHECK(step(F("a U b"), State{"a"}) == lor(bottom(), land(top(), F("a U b"))));
}

TEST_CASE("local simplification") {
  CHECK(simplify_local(lor(top(), land(top(), F("F a")))) == top());
  CHECK(simplify_local(F("X a | F !a")) == F("X a | F !a"));
  CHECK(simplify_local(lnot(lnot(land(atom("p"), top())))) == atom("p"));
  const Formula p = atom("p");
  CHECK(simplify_local(land(p, top())) == p);
  CHECK(simplify_local(land(top(), p)) == p);
  CHECK(simplify_local(land(p, bottom())) == bottom());
  CHECK(simplify_local(land(bottom(), p)) == bottom());
  CHECK(simplify_local(lor(p, top())) == top());
  CHECK(simplify_local(lor(top(), p)) == top());
  CHECK(simplify_local(lor(p, bottom())) == p);
  CHECK(simplify_local(lor(bottom(), p)) == p);
  CHECK(simplify_local(land(F("F p"), F("F p"))) == F("F p"));
  CHECK(simplify_local(lor(F("X p"), F("X p"))) == F("X p"));
  CHECK(simplify_local(bottom()) == bottom());
  CHECK(simplify_local(lnot(bottom())) == top());
  CHECK(simplify_local(next(land(top(), p))) == next(p));
  CHECK(simplify_local(until(lor(p, top()), land(p, p))) == until(top(), p));
}

TEST_CASE("local simplification is a semantics-preserving fixpoint") {
  const Alphabet alph{"p", "q"};
  const auto lassos = enumerate_lassos(alph, 2, 2);
  Rng rng(4);
  const std::vector<std::string> atoms{"p", "q"};
  for (int i = 0; i < 1500; ++i) {
    Formula f = random_formula(rng, 1 + i % 12, atoms);
    // Sprinkle in constants so the rules have something to do.
    if (i % 3 == 0)
      f = lor(f, land(top(), lnot(lnot(f))));
    if (i % 3 == 1)
      f = land(f, lor(bottom(), f));
    const Formula s = simplify_local(f);
    REQUIRE(simplify_local(s) == s);
    REQUIRE(s.size() <= f.size());
    for (int k = 0; k < 20; ++k) {
      const auto& t = lassos[(i * 31 + k * 7) % lassos.size()];
      REQUIRE(oracle::holds(t, f) == oracle::holds(t, s));
    }
  }
}

TEST_CASE("run") {
  const Alphabet a{"a"};
  CHECK(run(F("F a"), T("a"), SimplifyPolicy::LocalOnly, a) == top());
  CHECK(run(F("a U b"), T("a"), SimplifyPolicy::LocalOnly, Alphabet{"a", "b"}) == F("a U b"));
  CHECK(run(F("X a | F !a"), T(""), SimplifyPolicy::LocalOnly, a) == F("X a | F !a"));
  CHECK(run(F("X a | F !a"), T(""), SimplifyPolicy::SemanticFinal, a) == F("X a | F !a"));
  CHECK(run(F("X a | F !a"), T(""), SimplifyPolicy::SemanticPerStep, a) == top());
  CHECK_THROWS_AS(run(F("G(r -> F a)"), T("r;r;r;r;r;r;r;r"), SimplifyPolicy::LocalOnly, Alphabet{"a", "r"}, {20}),
                  BudgetExceeded);
}

TEST_CASE("collapse") {
  const Alphabet a{"a"};
  CHECK(collapse(F("X a | F !a"), a) == top());
  CHECK(collapse(F("a & !a"), a) == bottom());
  CHECK(collapse(F("F a"), a) == F("F a"));
  CHECK(collapse(F("true & F a"), a) == F("F a"));
  CHECK_THROWS_AS(collapse(F("b"), a), AlphabetError);
}

TEST_CASE("verdicts by progression") {
  const Alphabet a{"a"};
  CHECK(verdict_progression(F("F a"), T("a"), a) == TT);
  CHECK(verdict_progression(F("X a | F !a"), T(""), a) == TT);
  CHECK(verdict_progression(F("G(r -> F a)"), T("r;"), Alphabet{"a", "r"}) == UU);
  CHECK(verdict_progression(F("G a"), T("a;"), a) == FF);
  CHECK(verdict_progression(F("F a | F !a"), T(""), a) == TT);
  CHECK(verdict_progression(F("F b | F !c"), T(""), Alphabet{"b", "c"}) == UU);
  CHECK(syntactic_verdict(run(F("X a | F !a"), T(""), SimplifyPolicy::LocalOnly, a)) == UU);
  CHECK(syntactic_verdict(top()) == TT);
  CHECK(syntactic_verdict(bottom()) == FF);
  CHECK(semantic_verdict(F("a & !a"), a) == FF);
}

TEST_CASE("progression lemma, exhaustive over small cases") {
  const Alphabet alph{"p", "q"};
  const auto lassos = enumerate_lassos(alph, 1, 2);
  for (const auto& f : enumerate_formulas(5, alph.props()))
    for (const auto& s : alph.states()) {
      const Formula g = step(f, s);
      for (const auto& u : lassos)
        REQUIRE_MESSAGE(oracle::holds(prepend(s, u), f) == oracle::holds(u, g), render(f) << " / " << s << " / " << u);
    }
}

TEST_CASE("step coherence at the verdict level") {
  const Alphabet alph{"p"};
  const auto traces = enumerate_traces(alph, 4);
  for (const auto& f : enumerate_formulas(5, alph.props())) {
    const VerdictOracle o(f, alph);
    for (const auto& s : alph.states()) {
      const VerdictOracle stepped(step(f, s), alph);
      for (const auto& t : traces) {
        FiniteTrace st{s};
        st.insert(st.end(), t.begin(), t.end());
        REQUIRE(o.verdict(st) == stepped.verdict(t));
      }
    }
  }
}

TEST_CASE("policy never changes a verdict") {
  const Alphabet alph{"p", "q"};
  const auto traces = enumerate_traces(alph, 3);
  for (const auto& f : enumerate_formulas(4, alph.props())) {
    const VerdictOracle o(f, alph);
    for (const auto& t : traces) {
      const Verdict expected = o.verdict(t);
      for (auto policy : all_policies)
        REQUIRE_MESSAGE(verdict_progression(f, t, alph, policy) == expected, render(f) << " after " << t);
    }
  }
}

TEST_CASE("residual verdict cache") {
  const Alphabet alph{"p", "q"};
  ResidualVerdictCache cache(alph);
  for (const auto& f : enumerate_formulas(4, alph.props()))
    REQUIRE(cache.get(f) == semantic_verdict(f, alph));
  const auto filled = cache.size();
  CHECK(cache.get(F("p U q")) == UU);
  CHECK(cache.size() == filled);
  CHECK_THROWS_AS(cache.get(F("r")), AlphabetError);
}
