#include "ltl3/cli.hpp"

#include "ltl3/classify.hpp"
#include "ltl3/crosscheck.hpp"
#include "ltl3/error.hpp"
#include "ltl3/generate.hpp"
#include "ltl3/monitor.hpp"
#include "ltl3/parser.hpp"
#include "ltl3/trace_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>

namespace ltl3 {
namespace {

/// An input problem that is not a library error (bad flag value, missing file).
struct UsageError : Error {
  using Error::Error;
};

struct Common {
  std::string formula;
  std::vector<std::string> alphabet;
  std::size_t max_props = 10;
  std::size_t max_nodes = default_node_budget;
};

void add_formula_options(CLI::App& cmd, Common& c, bool formula_required = true) {
  auto* f = cmd.add_option("-f,--formula", c.formula, "LTL formula, e.g. \"G(r -> F a)\"");
  if (formula_required)
    f->required();
  cmd.add_option("-a,--alphabet", c.alphabet, "propositions, comma separated (default: those of the formula)")
      ->delimiter(',');
  cmd.add_option("--max-props", c.max_props, "largest alphabet accepted")->capture_default_str();
  cmd.add_option("--max-nodes", c.max_nodes, "tableau node budget per automaton")->capture_default_str();
}

Alphabet resolve_alphabet(const Common& c, const std::set<std::string>& needed) {
  std::vector<std::string> names;
  if (c.alphabet.empty()) {
    names.assign(needed.begin(), needed.end());
  } else {
    for (const auto& n : c.alphabet) {
      if (!is_valid_prop_name(n))
        throw UsageError("'" + n + "' is not a valid proposition name");
      names.push_back(n);
    }
  }
  Alphabet alph(names);
  if (alph.size() > c.max_props)
    throw UsageError("alphabet has " + std::to_string(alph.size()) + " propositions; --max-props is " +
                     std::to_string(c.max_props));
  for (const auto& p : needed)
    if (!alph.contains(p))
      throw AlphabetError("proposition '" + p + "' is not in the alphabet");
  return alph;
}

Verdict parse_verdict(const std::string& s) {
  if (s == "T")
    return Verdict::True;
  if (s == "F")
    return Verdict::False;
  if (s == "?")
    return Verdict::Unknown;
  throw UsageError("verdict must be T, F or ?, not '" + s + "'");
}

const std::map<std::string, Backend> backend_names{{"progression", Backend::Progression},
                                                    {"compiled", Backend::Compiled}};
const std::map<std::string, SimplifyPolicy> policy_names{{"local", SimplifyPolicy::SemanticFinal},
                                                         {"semantic", SimplifyPolicy::SemanticPerStep}};

FiniteTrace load_trace(const std::optional<std::string>& path, const std::optional<std::string>& events) {
  if (events)
    return parse_events(*events);
  if (!path || *path == "-")
    return read_jsonl(std::cin);
  std::ifstream in(*path);
  if (!in)
    throw UsageError("cannot open trace file '" + *path + "'");
  try {
    return read_jsonl(in);
  } catch (const TraceFormatError& e) {
    throw TraceFormatError(*path + ": " + e.what(), 0);
  }
}

void check_states(const Alphabet& alph, const FiniteTrace& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (const auto& p : t[i].props())
      if (!alph.contains(p))
        throw AlphabetError("state " + std::to_string(i + 1) + " mentions '" + p + "', which is not in the alphabet");
}

// monitor

struct MonitorArgs {
  Common common;
  std::optional<std::string> trace_path;
  std::optional<std::string> events;
  std::string backend = "compiled";
  std::string policy = "local";
  bool final_only = false;
  std::optional<std::string> expect;
  std::optional<std::string> emit_automaton;
  std::size_t max_formula_size = default_formula_ceiling;
};

int cmd_monitor(const MonitorArgs& a, std::ostream& out) {
  const Formula f = parse(a.common.formula);
  const Alphabet alph = resolve_alphabet(a.common, props(f));
  std::optional<Verdict> expected;
  if (a.expect)
    expected = parse_verdict(*a.expect);
  const FiniteTrace t = load_trace(a.trace_path, a.events);
  check_states(alph, t);

  MonitorOptions opts;
  opts.policy = policy_names.at(a.policy);
  opts.max_nodes = a.common.max_nodes;
  opts.max_formula_size = a.max_formula_size;
  Monitor m(f, alph, backend_names.at(a.backend), opts);

  if (a.emit_automaton) {
    const auto automaton = m.automaton() ? m.automaton()
                                         : std::make_shared<const MonitorAutomaton>(
                                               build_monitor(f, alph, opts.max_monitor_states, opts.max_nodes));
    std::ofstream dot(*a.emit_automaton);
    if (!dot)
      throw UsageError("cannot write '" + *a.emit_automaton + "'");
    dot << to_dot(*automaton);
  }

  if (!a.final_only)
    out << 0 << '\t' << m.verdict() << '\n';
  for (const auto& s : t) {
    m.feed(s);
    if (!a.final_only)
      out << m.steps_fed() << '\t' << m.verdict() << '\n';
  }
  if (a.final_only)
    out << m.verdict() << '\n';
  return expected && *expected != m.verdict() ? 1 : 0;
}

// progress

struct ProgressArgs {
  Common common;
  std::optional<std::string> trace_path;
  std::optional<std::string> events;
  std::string policy = "local";
  std::size_t max_formula_size = default_formula_ceiling;
};

int cmd_progress(const ProgressArgs& a, std::ostream& out) {
  const Formula f = parse(a.common.formula);
  const Alphabet alph = resolve_alphabet(a.common, props(f));
  const FiniteTrace t = load_trace(a.trace_path, a.events);
  check_states(alph, t);
  const bool semantic = a.policy == "semantic";

  const auto simplify = [&](const Formula& g) {
    Formula r = semantic ? collapse(g, alph, a.common.max_nodes) : simplify_local(g);
    if (r.size() > a.max_formula_size)
      throw BudgetExceeded("progressed formula size " + std::to_string(r.size()) + " exceeds " +
                           std::to_string(a.max_formula_size));
    return r;
  };

  Formula residual = f;
  out << 0 << "\tinput\t" << residual << '\n';
  residual = simplify(residual);
  out << 0 << "\tsimplified\t" << residual << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Formula stepped = step(residual, t[i]);
    out << i + 1 << "\tstep\t" << stepped << '\n';
    residual = simplify(stepped);
    out << i + 1 << "\tsimplified\t" << residual << '\n';
  }
  out << "verdict\t" << semantic_verdict(residual, alph, a.common.max_nodes) << '\n';
  out << "syntactic\t" << syntactic_verdict(residual) << '\n';
  return 0;
}

// classify

struct ClassifyArgs {
  Common common;
  std::size_t max_monitor_states = default_monitor_budget;
};

void print_witness(std::ostream& out, const char* name, const Decision& d) {
  if (d.prefix)
    out << "witness\t" << name << "\tprefix\t" << *d.prefix << '\n';
  if (d.lasso)
    out << "witness\t" << name << "\tlasso\t" << *d.lasso << '\n';
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const Formula f = parse(a.common.formula);
  const Alphabet alph = resolve_alphabet(a.common, props(f));
  const auto c = classify_all(f, alph, {a.common.max_nodes, a.max_monitor_states});
  out << summary(c) << '\n';
  print_witness(out, "safety", c.safety);
  print_witness(out, "cosafety", c.co_safety);
  print_witness(out, "liveness", c.liveness);
  print_witness(out, "coliveness", c.co_liveness);
  print_witness(out, "monitorable", c.monitorable);
  return 0;
}

// crosscheck

struct CrosscheckArgs {
  std::size_t max_size = 4;
  std::size_t max_len = 3;
  std::vector<std::string> alphabet{"p"};
  std::uint64_t seed = 0;
  std::optional<std::size_t> count;
  bool verbose = false;
  std::size_t max_nodes = default_node_budget;
};

int cmd_crosscheck(const CrosscheckArgs& a, std::ostream& out) {
  Common c;
  c.alphabet = a.alphabet;
  const Alphabet alph = resolve_alphabet(c, {});
  CrossCheckLimits limits;
  limits.max_nodes = a.max_nodes;
  std::ostream* verbose = a.verbose ? &out : nullptr;
  const auto report = a.count ? crosscheck_random(a.seed, *a.count, a.max_size, a.max_len, alph, verbose, limits)
                              : crosscheck_exhaustive(a.max_size, a.max_len, alph, verbose, limits);
  out << report.summary() << '\n';
  for (const auto& m : report.counterexamples)
    out << "mismatch\t" << m << '\n';
  for (const auto& b : report.budget_errors)
    out << "budget\t" << b << '\n';
  return report.mismatches ? 1 : 0;
}

// bench

struct BenchArgs {
  Common common;
  std::size_t trace_len = 1000;
  std::string backend = "compiled";
  std::string policy = "local";
  std::uint64_t seed = 0;
  std::size_t max_formula_size = default_formula_ceiling;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const Formula f = parse(a.common.formula);
  const Alphabet alph = resolve_alphabet(a.common, props(f));
  Rng rng(a.seed);
  const FiniteTrace t = random_trace(rng, alph, a.trace_len);

  MonitorOptions opts;
  opts.policy = policy_names.at(a.policy);
  opts.max_nodes = a.common.max_nodes;
  opts.max_formula_size = a.max_formula_size;
  // Latching would skip the backend once a verdict is definitive, which
  // makes the timing meaningless.
  opts.latch = false;

  const auto start = std::chrono::steady_clock::now();
  Monitor m(f, alph, backend_names.at(a.backend), opts);
  std::string failure;
  try {
    for (const auto& s : t)
      m.feed(s);
  } catch (const BudgetExceeded& e) {
    failure = e.what();
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  out << "formula\t" << f << '\n';
  out << "alphabet\t" << alph << '\n';
  out << "backend\t" << a.backend << '\n';
  out << "seed\t" << a.seed << '\n';
  out << "trace_len\t" << t.size() << '\n';
  out << "states_processed\t" << m.steps_fed() << '\n';
  out << "final_verdict\t" << m.verdict() << '\n';
  if (m.automaton())
    out << "automaton_states\t" << m.automaton()->state_count() << '\n';
  else
    out << "max_formula_size\t" << m.max_residual_size() << '\n';
  if (!failure.empty())
    out << "budget_exceeded\t" << failure << '\n';
  out << "--- timing ---\n";
  out << std::fixed << std::setprecision(6) << "wall_seconds\t" << elapsed.count() << '\n';
  const double rate = elapsed.count() > 0 ? static_cast<double>(m.steps_fed()) / elapsed.count() : 0.0;
  out << std::setprecision(0) << "states_per_second\t" << rate << '\n';
  out << "--- end timing ---\n";
  return failure.empty() ? 0 : 2;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-valued LTL runtime monitoring", "ltl3mon"};
  app.require_subcommand(1);
  app.footer("Exit status: 0 ok, 1 failed expectation or crosscheck mismatch, 2 usage or input error.\n"
             "Formula syntax: true false ! X F G & | -> U R, parentheses; identifiers are propositions.");

  const auto backend_check = CLI::IsMember({"progression", "compiled"});
  const auto policy_check = CLI::IsMember({"local", "semantic"});

  MonitorArgs mon;
  auto* monitor = app.add_subcommand("monitor", "print the verdict after each state of a trace");
  add_formula_options(*monitor, mon.common);
  auto* trace_opt = monitor->add_option("-t,--trace", mon.trace_path, "JSONL trace file ('-' for stdin)");
  monitor->add_option("-e,--events", mon.events, "compact trace, e.g. \"a;;a,b\"")->excludes(trace_opt);
  monitor->add_option("-b,--backend", mon.backend)->check(backend_check)->capture_default_str();
  monitor->add_option("--policy", mon.policy, "progression simplification")->check(policy_check)->capture_default_str();
  monitor->add_flag("--final", mon.final_only, "print only the last verdict");
  monitor->add_option("--expect", mon.expect, "exit 1 unless the last verdict is this (T, F or ?)");
  monitor->add_option("--emit-automaton", mon.emit_automaton, "write the monitor automaton as dot to FILE");
  monitor->add_option("--max-formula-size", mon.max_formula_size)->capture_default_str();

  ProgressArgs prog;
  auto* progress = app.add_subcommand("progress", "show the progressed formula before and after simplification");
  add_formula_options(*progress, prog.common);
  auto* ptrace = progress->add_option("-t,--trace", prog.trace_path, "JSONL trace file ('-' for stdin)");
  progress->add_option("-e,--events", prog.events, "compact trace")->excludes(ptrace);
  progress->add_option("--policy", prog.policy)->check(policy_check)->capture_default_str();
  progress->add_option("--max-formula-size", prog.max_formula_size)->capture_default_str();

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "safety, co-safety, liveness, co-liveness and monitorability");
  add_formula_options(*classify, cls.common);
  classify->add_option("--max-monitor-states", cls.max_monitor_states)->capture_default_str();

  CrosscheckArgs cc;
  auto* cross = app.add_subcommand("crosscheck", "compare progression, the oracle and the compiled monitor");
  cross->add_option("--max-size", cc.max_size, "largest formula size")->capture_default_str();
  cross->add_option("--max-len", cc.max_len, "longest trace")->capture_default_str();
  cross->add_option("-a,--alphabet", cc.alphabet, "propositions, comma separated")->delimiter(',')
      ->capture_default_str();
  cross->add_option("--seed", cc.seed)->capture_default_str();
  cross->add_option("--count", cc.count, "sample this many random cases instead of enumerating");
  cross->add_flag("-v,--verbose", cc.verbose, "print every case");
  cross->add_option("--max-nodes", cc.max_nodes)->capture_default_str();

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "time a backend on a random trace");
  add_formula_options(*bench, bn.common);
  bench->add_option("-n,--trace-len", bn.trace_len)->capture_default_str();
  bench->add_option("-b,--backend", bn.backend)->check(backend_check)->capture_default_str();
  bench->add_option("--policy", bn.policy)->check(policy_check)->capture_default_str();
  bench->add_option("--seed", bn.seed)->capture_default_str();
  bench->add_option("--max-formula-size", bn.max_formula_size)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (monitor->parsed())
      return cmd_monitor(mon, out);
    if (progress->parsed())
      return cmd_progress(prog, out);
    if (classify->parsed())
      return cmd_classify(cls, out);
    if (cross->parsed())
      return cmd_crosscheck(cc, out);
    return cmd_bench(bn, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

} // namespace ltl3
