#pragma once

#include "ltl3/formula.hpp"
#include "ltl3/trace.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace ltl3 {

/// Every structurally distinct formula of size 1..max_size over the given
/// atoms, in order of increasing size. No formula appears twice.
std::vector<Formula> enumerate_formulas(std::size_t max_size, const std::vector<std::string>& atoms);

/// Every finite trace over alph of length 0..max_len, shortest first.
std::vector<FiniteTrace> enumerate_traces(const Alphabet& alph, std::size_t max_len);

/// Every lasso with |stem| <= max_stem and 1 <= |loop| <= max_loop.
std::vector<LassoTrace> enumerate_lassos(const Alphabet& alph, std::size_t max_stem, std::size_t max_loop);

using Rng = std::mt19937_64;

/// Random formula of exactly the given size (>= 1).
Formula random_formula(Rng& rng, std::size_t size, const std::vector<std::string>& atoms);

FiniteTrace random_trace(Rng& rng, const Alphabet& alph, std::size_t len);
State random_state(Rng& rng, const Alphabet& alph);
LassoTrace random_lasso(Rng& rng, const Alphabet& alph, std::size_t max_stem, std::size_t max_loop);

} // namespace ltl3
