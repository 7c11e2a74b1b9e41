#include "ltl3/semantics.hpp"

#include "ltl3/error.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ltl3 {

char to_char(Verdict v) {
  switch (v) {
  case Verdict::True: return 'T';
  case Verdict::False: return 'F';
  default: return '?';
  }
}

std::ostream& operator<<(std::ostream& os, Verdict v) { return os << to_char(v); }

namespace {

void check_props(const Formula& f, const Alphabet& alph) {
  for (const auto& p : props(f)) {
    if (!alph.contains(p)) {
      std::ostringstream msg;
      msg << "formula proposition '" << p << "' is not in the alphabet " << alph;
      throw AlphabetError(msg.str());
    }
  }
}

/// Subformula table for bottom-up evaluation; children precede parents.
struct Flat {
  struct Entry {
    Op op;
    std::uint32_t bit = 0;
    int a = -1;
    int b = -1;
  };
  std::vector<Entry> entries;

  int add(const Formula& f, const Alphabet& alph) {
    Entry e{f.op()};
    switch (f.op()) {
    case Op::Top:
      break;
    case Op::Atom:
      e.bit = std::uint32_t{1} << *alph.index_of(f.name());
      break;
    case Op::Not:
    case Op::Next:
      e.a = add(f.lhs(), alph);
      break;
    default:
      e.a = add(f.lhs(), alph);
      e.b = add(f.rhs(), alph);
    }
    entries.push_back(e);
    return static_cast<int>(entries.size()) - 1;
  }
};

} // namespace

bool eval_classic(const LassoTrace& t, const Formula& f, const Alphabet& alph) {
  check_props(f, alph);
  check_trace(alph, t);

  const std::size_t n = t.positions();
  std::vector<std::uint32_t> letters(n);
  for (std::size_t i = 0; i < n; ++i)
    letters[i] = alph.letter(state_at(t, i));

  Flat flat;
  const int root = flat.add(f, alph);
  std::vector<std::vector<char>> val(flat.entries.size(), std::vector<char>(n, 0));

  for (std::size_t k = 0; k < flat.entries.size(); ++k) {
    const auto& e = flat.entries[k];
    auto& v = val[k];
    switch (e.op) {
    case Op::Top:
      std::fill(v.begin(), v.end(), 1);
      break;
    case Op::Atom:
      for (std::size_t i = 0; i < n; ++i)
        v[i] = (letters[i] & e.bit) != 0;
      break;
    case Op::Not:
      for (std::size_t i = 0; i < n; ++i)
        v[i] = !val[e.a][i];
      break;
    case Op::And:
      for (std::size_t i = 0; i < n; ++i)
        v[i] = val[e.a][i] && val[e.b][i];
      break;
    case Op::Or:
      for (std::size_t i = 0; i < n; ++i)
        v[i] = val[e.a][i] || val[e.b][i];
      break;
    case Op::Next:
      for (std::size_t i = 0; i < n; ++i)
        v[i] = val[e.a][t.successor(i)];
      break;
    case Op::Until: {
      const auto& lhs = val[e.a];
      const auto& rhs = val[e.b];
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = n; j-- > 0;) {
          const char nv = rhs[j] || (lhs[j] && v[t.successor(j)]);
          if (nv != v[j]) {
            v[j] = nv;
            changed = true;
          }
        }
      }
      break;
    }
    }
  }
  return val[root][0] != 0;
}

namespace {

bool polar(const LassoTrace& t, const Formula& f, Polarity pol) {
  const bool want_t = pol == Polarity::T;
  switch (f.op()) {
  case Op::Top:
    return want_t;
  case Op::Atom:
    return state_at(t, 0).contains(f.name()) == want_t;
  case Op::Not:
    return polar(t, f.lhs(), flip(pol));
  case Op::And:
    return want_t ? polar(t, f.lhs(), pol) && polar(t, f.rhs(), pol)
                  : polar(t, f.lhs(), pol) || polar(t, f.rhs(), pol);
  case Op::Or:
    return want_t ? polar(t, f.lhs(), pol) || polar(t, f.rhs(), pol)
                  : polar(t, f.lhs(), pol) && polar(t, f.rhs(), pol);
  case Op::Next:
    return polar(drop(t, 1), f.lhs(), pol);
  case Op::Until: {
    // Suffixes repeat after |stem|+|loop| positions, so the search for a
    // witness (or a blocking position) never needs to go further.
    const std::size_t bound = t.positions();
    if (want_t) {
      for (std::size_t i = 0; i < bound; ++i) {
        if (polar(drop(t, i), f.rhs(), Polarity::T))
          return true;
        if (!polar(drop(t, i), f.lhs(), Polarity::T))
          return false;
      }
      return false;
    }
    // F: for all i, the rhs is refuted at i or the lhs is refuted before i.
    for (std::size_t i = 0; i < bound; ++i) {
      if (!polar(drop(t, i), f.rhs(), Polarity::F))
        return false;
      if (polar(drop(t, i), f.lhs(), Polarity::F))
        return true;
    }
    return true;
  }
  }
  return false;
}

} // namespace

bool eval_polar(const LassoTrace& t, const Formula& f, Polarity pol, const Alphabet& alph) {
  check_props(f, alph);
  check_trace(alph, t);
  return polar(t, f, pol);
}

} // namespace ltl3
