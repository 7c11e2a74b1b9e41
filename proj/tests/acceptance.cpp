// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time limit.

#include "ltl3/classify.hpp"
#include "ltl3/cli.hpp"
#include "ltl3/crosscheck.hpp"
#include "ltl3/generate.hpp"
#include "ltl3/monitor.hpp"
#include "ltl3/oracle.hpp"
#include "ltl3/parser.hpp"
#include "support/laws.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_set>

using namespace ltl3;

namespace {

constexpr Verdict TT = Verdict::True;
constexpr Verdict FF = Verdict::False;
constexpr Verdict UU = Verdict::Unknown;

/// Collects failed expectations of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 10)
      failures.push_back(what);
  }
};

std::string str(const Verdict v) { return std::string(1, to_char(v)); }

std::string str(const FiniteTrace& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

FiniteTrace trace(std::initializer_list<State> states) { return FiniteTrace(states); }

struct Runner {
  int failed = 0;

  void run(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    const bool in_time = took.count() < limit_seconds;
    const bool ok = c.failures.empty() && in_time;
    if (!ok)
      ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << title << "  ("
              << c.cases << " checks, " << std::fixed << std::setprecision(2) << took.count() << " s, limit "
              << limit_seconds << " s)\n";
    for (const auto& f : c.failures)
      std::cout << "        " << f << '\n';
    if (!in_time)
      std::cout << "        time limit exceeded\n";
    std::cout.flush();
  }
};

/// The three verdict routes agree, and definitive verdicts persist along
/// every extension, for each prefix visited by sweep_traces.
struct CorpusSweep {
  std::vector<Formula> formulas;
  Alphabet alph{"p", "q"};
  std::size_t max_len = 5;

  void run(const std::function<void(const Formula&, const FiniteTrace&, const VerdictTriple&)>& visit) const {
    ResidualVerdictCache cache(alph);
    for (const auto& f : formulas)
      sweep_traces(f, alph, max_len, cache, [&](const FiniteTrace& t, const VerdictTriple& v) { visit(f, t, v); });
  }
};

} // namespace

int main() {
  Runner r;
  const Formula fa = parse("F a");

  r.run(1, "verdicts at the empty trace", 1, [](Check& c) {
    struct Case {
      const char* formula;
      Alphabet alph;
      Verdict expected;
    };
    for (const auto& k : {Case{"F a | F !a", Alphabet{"a"}, TT}, Case{"F b | F !c", Alphabet{"b", "c"}, UU},
                          Case{"F a", Alphabet{"a"}, UU}}) {
      const Formula f = parse(k.formula);
      const Verdict o = verdict_oracle(f, {}, k.alph);
      const Verdict p = verdict_progression(f, {}, k.alph);
      c.expect(o == k.expected, std::string(k.formula) + ": oracle gave " + str(o));
      c.expect(p == k.expected, std::string(k.formula) + ": progression gave " + str(p));
    }
  });

  r.run(2, "progression of F a over [{a}]", 1, [&](Check& c) {
    const Formula stepped = step(fa, State{"a"});
    c.expect(stepped == lor(top(), land(top(), fa)), "step gave " + render(stepped));
    c.expect(render(stepped) == "true | (true & (true U a))", "rendered as " + render(stepped));
    c.expect(simplify_local(stepped) == top(), "simplified to " + render(simplify_local(stepped)));
    const Verdict v = verdict_progression(fa, trace({State{"a"}}), Alphabet{"a"});
    c.expect(v == TT, "verdict " + str(v));
  });

  r.run(3, "local simplification alone misses a tautology", 1, [](Check& c) {
    const Formula f = parse("(X a) | F !a");
    const Alphabet a{"a"};
    const Formula semantic = run(f, {}, SimplifyPolicy::SemanticPerStep, a);
    const Formula local = run(f, {}, SimplifyPolicy::LocalOnly, a);
    c.expect(semantic == top(), "semantic policy left " + render(semantic));
    c.expect(verdict_progression(f, {}, a, SimplifyPolicy::SemanticPerStep) == TT, "semantic verdict not T");
    c.expect(!local.is_top(), "local policy reached true");
    c.expect(local == f, "local policy changed the formula to " + render(local));
    c.expect(syntactic_verdict(local) == UU, "local syntactic verdict " + str(syntactic_verdict(local)));
  });

  r.run(4, "p U q prefixes", 1, [](Check& c) {
    const Formula f = parse("p U q");
    const Alphabet alph{"p", "q"};
    const State p{"p"}, q{"q"};
    struct Case {
      FiniteTrace t;
      Verdict expected;
    };
    const auto compiled = build_monitor(f, alph);
    for (const auto& k : {Case{trace({p, p, p}), UU}, Case{trace({p, p, q}), TT}, Case{trace({p, State{}}), FF}}) {
      c.expect(verdict_oracle(f, k.t, alph) == k.expected, "oracle on " + str(k.t));
      c.expect(verdict_progression(f, k.t, alph) == k.expected, "progression on " + str(k.t));
      c.expect(compiled.verdict(compiled.run(k.t)) == k.expected, "compiled monitor on " + str(k.t));
    }
  });

  r.run(5, "G(r -> F a) is undecided on every trace up to length 6", 10, [](Check& c) {
    const Formula f = parse("G(r -> F a)");
    const Alphabet alph{"a", "r"};
    ResidualVerdictCache cache(alph);
    std::size_t traces = 0;
    sweep_traces(f, alph, 6, cache, [&](const FiniteTrace& t, const VerdictTriple& v) {
      ++traces;
      c.expect(v.oracle == UU && v.progression == UU && v.compiled == UU, "definitive verdict on " + str(t));
    });
    c.expect(traces == 5461, "visited " + std::to_string(traces) + " traces, expected 5461");
  });

  const CorpusSweep corpus{enumerate_formulas(6, {"p", "q"})};

  r.run(6, "progression, oracle and compiled monitor agree (size <= 6, length <= 5)", 600, [&](Check& c) {
    const std::unordered_set<Formula> distinct(corpus.formulas.begin(), corpus.formulas.end());
    c.expect(distinct.size() == corpus.formulas.size(), "generator produced duplicates");
    std::size_t mismatches = 0;
    corpus.run([&](const Formula& f, const FiniteTrace& t, const VerdictTriple& v) {
      if (!v.agree())
        ++mismatches;
      c.expect(v.agree(), render(f) + " on " + str(t) + ": progression " + str(v.progression) + ", oracle " +
                              str(v.oracle) + ", compiled " + str(v.compiled));
    });
    std::cout << "        " << corpus.formulas.size() << " formulas, " << c.cases << " cases, " << mismatches
              << " mismatches\n";
  });

  r.run(7, "progression lemma on 500 seeded random triples", 30, [](Check& c) {
    const Alphabet alph{"p", "q"};
    Rng rng(2024);
    for (int i = 0; i < 500; ++i) {
      const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
      const Formula f = random_formula(rng, size, alph.props());
      const State s = random_state(rng, alph);
      const LassoTrace u = random_lasso(rng, alph, 3, 3);
      const bool lhs = eval_classic(prepend(s, u), f, alph);
      const bool rhs = eval_classic(u, step(f, s), alph);
      std::ostringstream what;
      what << render(f) << " / " << s << " / " << u;
      c.expect(lhs == rhs, what.str());
    }
  });

  r.run(8, "answer families agree with satisfaction (size <= 5 over {p})", 60, [](Check& c) {
    const Alphabet alph{"p"};
    const auto lassos = enumerate_lassos(alph, 2, 2);
    for (const auto& f : enumerate_formulas(5, alph.props()))
      for (const auto& t : lassos) {
        const bool classic = eval_classic(t, f, alph);
        std::ostringstream what;
        what << render(f) << " on " << t;
        c.expect(eval_polar(t, f, Polarity::T, alph) == classic, "T polarity: " + what.str());
        c.expect(eval_polar(t, f, Polarity::F, alph) == !classic, "F polarity: " + what.str());
      }
  });

  r.run(9, "negation swaps verdicts over the corpus", 600, [&](Check& c) {
    const Alphabet& alph = corpus.alph;
    ResidualVerdictCache cache(alph);
    for (const auto& f : corpus.formulas) {
      std::vector<VerdictTriple> pos;
      sweep_traces(f, alph, corpus.max_len, cache, [&](const FiniteTrace&, const VerdictTriple& v) { pos.push_back(v); });
      std::size_t i = 0;
      sweep_traces(lnot(f), alph, corpus.max_len, cache, [&](const FiniteTrace& t, const VerdictTriple& v) {
        const VerdictTriple& w = pos[i++];
        c.expect(v.oracle == swap(w.oracle) && v.progression == swap(w.progression) && v.compiled == swap(w.compiled),
                 render(f) + " on " + str(t));
      });
    }
  });

  r.run(10, "definitive-set lattice laws", 120, [](Check& c) {
    laws::Report rep;
    const auto u2 = laws::singleton_universe(2, 2);
    const auto subsets = laws::all_subsets(u2);
    c.expect(subsets.size() == 128, "expected 128 subsets");
    std::vector<laws::TraceSet> definitive2;
    for (const auto& x : subsets)
      if (is_definitive(x))
        definitive2.push_back(x);
    std::vector<laws::TraceSet> properties;
    for (const auto& x : subsets)
      if (x.subset_of(definitive::TraceSet::maximal(u2)))
        properties.push_back(x);
    std::size_t pairs = 0;
    for (const auto& x : subsets) {
      laws::operators_match_reference(x, rep);
      laws::single_set_laws(x, rep);
      for (const auto& y : subsets) {
        laws::pair_laws(x, y, definitive2, rep);
        ++pairs;
      }
    }
    c.expect(pairs == 16384, "expected 16384 pairs");
    for (const auto& x : definitive2)
      for (const auto& p : properties)
        laws::isomorphism_laws(x, p, rep);
    laws::non_closure_witness(u2, rep);

    const auto u3 = laws::singleton_universe(2, 3);
    std::vector<laws::TraceSet> definitive3;
    for (const auto& x : laws::all_subsets(u3))
      if (is_definitive(x))
        definitive3.push_back(x);
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<unsigned long long> code(0, (1ULL << u3->trace_count()) - 1);
    std::uniform_int_distribution<std::size_t> pick(0, definitive3.size() - 1);
    for (int i = 0; i < 100000; ++i) {
      const auto x = definitive::TraceSet::from_code(u3, code(rng));
      const auto y = definitive::TraceSet::from_code(u3, code(rng));
      laws::operators_match_reference(x, rep);
      laws::single_set_laws(x, rep);
      laws::pair_laws(x, y, definitive3, rep);
      // Random subsets are rarely definitive, so also draw definitive pairs.
      const auto& dx = definitive3[pick(rng)];
      const auto& dy = definitive3[pick(rng)];
      laws::pair_laws(dx, dy, definitive3, rep);
      laws::isomorphism_laws(dx, pr(dy), rep);
    }
    laws::non_closure_witness(u3, rep);
    c.cases += rep.checks;
    for (const auto& f : rep.failures)
      c.failures.push_back(f);
  });

  r.run(11, "classification table", 10, [](Check& c) {
    struct Case {
      const char* formula;
      const char* expected;
    };
    // The co-liveness of G p follows from its definition: no finite prefix
    // of G p is good.
    for (const auto& k : {
             Case{"G p", "safety=true cosafety=false liveness=false coliveness=true monitorable=true"},
             Case{"F p", "safety=false cosafety=true liveness=true coliveness=false monitorable=true"},
             Case{"G F p", "safety=false cosafety=false liveness=true coliveness=true monitorable=false"},
             Case{"G(r -> F a)", "safety=false cosafety=false liveness=true coliveness=true monitorable=false"},
         }) {
      const Formula f = parse(k.formula);
      const std::string got = summary(classify_all(f, Alphabet(props(f))));
      c.expect(got == k.expected, std::string(k.formula) + ": " + got);
    }
    const Formula mixed = parse("((p | q) U r) | G p");
    c.expect(is_monitorable(mixed, Alphabet(props(mixed))).holds, "((p | q) U r) | G p not monitorable");
  });

  r.run(12, "definitive verdicts never change along extensions", 600, [&](Check& c) {
    std::vector<VerdictTriple> along(corpus.max_len + 1);
    corpus.run([&](const Formula& f, const FiniteTrace& t, const VerdictTriple& v) {
      along[t.size()] = v;
      if (t.empty())
        return;
      const VerdictTriple& parent = along[t.size() - 1];
      const auto stable = [](Verdict before, Verdict after) { return before == UU || before == after; };
      c.expect(stable(parent.oracle, v.oracle) && stable(parent.progression, v.progression) &&
                   stable(parent.compiled, v.compiled),
               render(f) + " changes verdict at " + str(t));
    });
  });

  r.run(13, "performance on a 100000-state trace", 60, [](Check& c) {
    const Formula f = parse("G(r -> F a)");
    const Alphabet alph{"a", "r"};
    Rng rng(13);
    const FiniteTrace t = random_trace(rng, alph, 100000);

    MonitorOptions opts;
    opts.latch = false;
    Monitor compiled(f, alph, Backend::Compiled, opts);
    const std::size_t states = compiled.automaton()->state_count();
    for (const auto& s : t) {
      compiled.feed(s);
      c.expect(compiled.automaton_state() >= 0 && static_cast<std::size_t>(compiled.automaton_state()) < states,
               "compiled state out of range");
    }
    c.expect(compiled.automaton()->state_count() == states, "compiled monitor grew");

    Monitor progression(f, alph, Backend::Progression, opts);
    for (const auto& s : t)
      progression.feed(s);
    c.expect(progression.verdict() == compiled.verdict(), "backends disagree at the end of the trace");
    c.expect(progression.max_residual_size() <= 1000,
             "largest residual " + std::to_string(progression.max_residual_size()) + " exceeds 1000");
    std::cout << "        compiled monitor: " << states << " states; largest progression residual: "
              << progression.max_residual_size() << " nodes\n";

    for (const char* backend : {"compiled", "progression"}) {
      const char* argv[] = {"ltl3mon", "bench", "--formula", "G(r -> F a)", "--trace-len", "100000",
                            "--backend", backend, "--seed", "13"};
      std::ostringstream out, err;
      const int code = run_cli(10, argv, out, err);
      c.expect(code == 0, std::string("bench ") + backend + " exited " + std::to_string(code) + ": " + err.str());
      c.expect(out.str().find("states_per_second\t") != std::string::npos, "bench report lacks throughput");
      std::istringstream lines(out.str());
      for (std::string line; std::getline(lines, line);)
        std::cout << "        | " << line << '\n';
    }
  });

  std::cout << (r.failed ? std::to_string(r.failed) + " criteria failed\n" : "all criteria passed\n");
  return r.failed ? 1 : 0;
}
