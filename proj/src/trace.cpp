#include "ltl3/trace.hpp"

#include "ltl3/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ltl3 {
namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

State::State(std::initializer_list<std::string> true_props)
    : props_(sorted_unique(std::vector<std::string>(true_props))) {}

State::State(std::vector<std::string> true_props) : props_(sorted_unique(std::move(true_props))) {}

bool State::contains(const std::string& prop) const {
  return std::binary_search(props_.begin(), props_.end(), prop);
}

std::ostream& operator<<(std::ostream& os, const State& s) {
  os << '{';
  for (std::size_t i = 0; i < s.props().size(); ++i)
    os << (i ? "," : "") << s.props()[i];
  return os << '}';
}

Alphabet::Alphabet(std::initializer_list<std::string> props)
    : Alphabet(std::vector<std::string>(props)) {}

Alphabet::Alphabet(std::vector<std::string> props) : props_(sorted_unique(std::move(props))) {
  if (props_.size() > max_props)
    throw BudgetExceeded("alphabet has " + std::to_string(props_.size()) +
                         " propositions; at most " + std::to_string(max_props) + " are supported");
}

Alphabet::Alphabet(const std::set<std::string>& props)
    : Alphabet(std::vector<std::string>(props.begin(), props.end())) {}

std::optional<std::size_t> Alphabet::index_of(const std::string& prop) const {
  auto it = std::lower_bound(props_.begin(), props_.end(), prop);
  if (it == props_.end() || *it != prop)
    return std::nullopt;
  return static_cast<std::size_t>(it - props_.begin());
}

bool Alphabet::covers(const std::set<std::string>& props) const {
  return std::all_of(props.begin(), props.end(), [&](const std::string& p) { return contains(p); });
}

std::uint32_t Alphabet::letter(const State& s) const {
  std::uint32_t mask = 0;
  for (const auto& p : s.props()) {
    auto i = index_of(p);
    if (!i)
      throw AlphabetError("proposition '" + p + "' is not in the alphabet");
    mask |= std::uint32_t{1} << *i;
  }
  return mask;
}

State Alphabet::state(std::uint32_t letter) const {
  std::vector<std::string> on;
  for (std::size_t i = 0; i < props_.size(); ++i)
    if (letter & (std::uint32_t{1} << i))
      on.push_back(props_[i]);
  return State(std::move(on));
}

std::vector<State> Alphabet::states() const {
  std::vector<State> out;
  out.reserve(letter_count());
  for (std::uint32_t l = 0; l < letter_count(); ++l)
    out.push_back(state(l));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Alphabet& a) {
  os << '{';
  for (std::size_t i = 0; i < a.size(); ++i)
    os << (i ? "," : "") << a.props()[i];
  return os << '}';
}

LassoTrace::LassoTrace(FiniteTrace stem, FiniteTrace loop)
    : stem_(std::move(stem)), loop_(std::move(loop)) {
  if (loop_.empty())
    throw DomainError("lasso loop must be nonempty");
}

std::ostream& operator<<(std::ostream& os, const FiniteTrace& t) {
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i)
    os << (i ? " " : "") << t[i];
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const LassoTrace& t) {
  return os << t.stem() << '(' << t.loop() << ")^w";
}

FiniteTrace drop(const FiniteTrace& t, std::size_t n) {
  if (n >= t.size())
    return {};
  return FiniteTrace(t.begin() + static_cast<std::ptrdiff_t>(n), t.end());
}

LassoTrace drop(const LassoTrace& t, std::size_t n) {
  if (n <= t.stem().size())
    return LassoTrace(drop(t.stem(), n), t.loop());
  const std::size_t shift = (n - t.stem().size()) % t.loop().size();
  FiniteTrace loop = t.loop();
  std::rotate(loop.begin(), loop.begin() + static_cast<std::ptrdiff_t>(shift), loop.end());
  return LassoTrace({}, std::move(loop));
}

const State& state_at(const FiniteTrace& t, std::size_t i) {
  if (i >= t.size())
    throw std::out_of_range("state index " + std::to_string(i) + " out of range for trace of length " +
                            std::to_string(t.size()));
  return t[i];
}

const State& state_at(const LassoTrace& t, std::size_t i) {
  if (i < t.stem().size())
    return t.stem()[i];
  return t.loop()[(i - t.stem().size()) % t.loop().size()];
}

FiniteTrace unroll(const LassoTrace& t, std::size_t k) {
  FiniteTrace out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(state_at(t, i));
  return out;
}

LassoTrace prepend(const State& s, const LassoTrace& t) {
  FiniteTrace stem;
  stem.reserve(t.stem().size() + 1);
  stem.push_back(s);
  stem.insert(stem.end(), t.stem().begin(), t.stem().end());
  return LassoTrace(std::move(stem), t.loop());
}

bool same_infinite_trace(const LassoTrace& a, const LassoTrace& b) {
  const std::size_t stems = std::max(a.stem().size(), b.stem().size());
  const std::size_t period = std::lcm(a.loop().size(), b.loop().size());
  const std::size_t k = stems + period;
  return unroll(a, k) == unroll(b, k);
}

void check_trace(const Alphabet& alph, const FiniteTrace& t) {
  for (const auto& s : t)
    (void)alph.letter(s);
}

void check_trace(const Alphabet& alph, const LassoTrace& t) {
  check_trace(alph, t.stem());
  check_trace(alph, t.loop());
}

} // namespace ltl3
