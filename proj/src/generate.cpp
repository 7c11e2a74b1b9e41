#include "ltl3/generate.hpp"

#include "ltl3/error.hpp"

namespace ltl3 {

std::vector<Formula> enumerate_formulas(std::size_t max_size, const std::vector<std::string>& atoms) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  if (max_size >= 1) {
    by_size[1].push_back(top());
    for (const auto& a : atoms)
      by_size[1].push_back(atom(a));
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    auto& layer = by_size[n];
    for (const auto& c : by_size[n - 1]) {
      layer.push_back(lnot(c));
      layer.push_back(next(c));
    }
    for (std::size_t l = 1; l + 1 < n; ++l) {
      const std::size_t r = n - 1 - l;
      for (const auto& a : by_size[l])
        for (const auto& b : by_size[r]) {
          layer.push_back(land(a, b));
          layer.push_back(lor(a, b));
          layer.push_back(until(a, b));
        }
    }
  }
  std::vector<Formula> out;
  for (auto& layer : by_size)
    out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::vector<FiniteTrace> enumerate_traces(const Alphabet& alph, std::size_t max_len) {
  const auto states = alph.states();
  std::vector<FiniteTrace> out{FiniteTrace{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (const auto& s : states) {
        FiniteTrace t = out[i];
        t.push_back(s);
        out.push_back(std::move(t));
      }
    layer_begin = layer_end;
  }
  return out;
}

std::vector<LassoTrace> enumerate_lassos(const Alphabet& alph, std::size_t max_stem, std::size_t max_loop) {
  const auto all = enumerate_traces(alph, std::max(max_stem, max_loop));
  std::vector<LassoTrace> out;
  for (const auto& stem : all) {
    if (stem.size() > max_stem)
      continue;
    for (const auto& loop : all)
      if (!loop.empty() && loop.size() <= max_loop)
        out.emplace_back(stem, loop);
  }
  return out;
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

Formula random_formula(Rng& rng, std::size_t size, const std::vector<std::string>& atoms) {
  if (size == 0)
    throw DomainError("random formula size must be at least 1");
  if (size == 1) {
    const std::size_t pick = uniform(rng, 0, atoms.size());
    return pick == atoms.size() ? top() : atom(atoms[pick]);
  }
  if (size == 2) {
    Formula c = random_formula(rng, 1, atoms);
    return uniform(rng, 0, 1) ? lnot(std::move(c)) : next(std::move(c));
  }
  switch (uniform(rng, 0, 4)) {
  case 0:
    return lnot(random_formula(rng, size - 1, atoms));
  case 1:
    return next(random_formula(rng, size - 1, atoms));
  default: {
    const std::size_t l = uniform(rng, 1, size - 2);
    Formula a = random_formula(rng, l, atoms);
    Formula b = random_formula(rng, size - 1 - l, atoms);
    switch (uniform(rng, 0, 2)) {
    case 0: return land(std::move(a), std::move(b));
    case 1: return lor(std::move(a), std::move(b));
    default: return until(std::move(a), std::move(b));
    }
  }
  }
}

State random_state(Rng& rng, const Alphabet& alph) {
  return alph.state(static_cast<std::uint32_t>(uniform(rng, 0, alph.letter_count() - 1)));
}

FiniteTrace random_trace(Rng& rng, const Alphabet& alph, std::size_t len) {
  FiniteTrace t;
  t.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    t.push_back(random_state(rng, alph));
  return t;
}

LassoTrace random_lasso(Rng& rng, const Alphabet& alph, std::size_t max_stem, std::size_t max_loop) {
  auto stem = random_trace(rng, alph, uniform(rng, 0, max_stem));
  auto loop = random_trace(rng, alph, uniform(rng, 1, std::max<std::size_t>(1, max_loop)));
  return LassoTrace(std::move(stem), std::move(loop));
}

} // namespace ltl3
