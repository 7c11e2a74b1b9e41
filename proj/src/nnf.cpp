#include "ltl3/nnf.hpp"

namespace ltl3 {

NnfFormula NnfFormula::truth() { return NnfFormula(std::make_shared<Node>(Node{Kind::True, {}, true, nullptr, nullptr})); }
NnfFormula NnfFormula::falsity() { return NnfFormula(std::make_shared<Node>(Node{Kind::False, {}, true, nullptr, nullptr})); }

NnfFormula NnfFormula::lit(std::string prop, bool positive) {
  return NnfFormula(std::make_shared<Node>(Node{Kind::Lit, std::move(prop), positive, nullptr, nullptr}));
}

NnfFormula NnfFormula::binary(Kind k, NnfFormula a, NnfFormula b) {
  return NnfFormula(std::make_shared<Node>(Node{k, {}, true,
                                                std::make_shared<const NnfFormula>(std::move(a)),
                                                std::make_shared<const NnfFormula>(std::move(b))}));
}

NnfFormula NnfFormula::next(NnfFormula a) {
  return NnfFormula(std::make_shared<Node>(
      Node{Kind::Next, {}, true, std::make_shared<const NnfFormula>(std::move(a)), nullptr}));
}

bool operator==(const NnfFormula& x, const NnfFormula& y) {
  if (x.node_ == y.node_)
    return true;
  if (x.kind() != y.kind())
    return false;
  using K = NnfFormula::Kind;
  switch (x.kind()) {
  case K::True:
  case K::False:
    return true;
  case K::Lit:
    return x.prop() == y.prop() && x.positive() == y.positive();
  case K::Next:
    return x.lhs() == y.lhs();
  default:
    return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

namespace {

using K = NnfFormula::Kind;

NnfFormula convert(const Formula& f, bool negated) {
  switch (f.op()) {
  case Op::Top:
    return negated ? NnfFormula::falsity() : NnfFormula::truth();
  case Op::Atom:
    return NnfFormula::lit(f.name(), !negated);
  case Op::Not:
    return convert(f.lhs(), !negated);
  case Op::And:
    return NnfFormula::binary(negated ? K::Or : K::And, convert(f.lhs(), negated),
                              convert(f.rhs(), negated));
  case Op::Or:
    return NnfFormula::binary(negated ? K::And : K::Or, convert(f.lhs(), negated),
                              convert(f.rhs(), negated));
  case Op::Next:
    return NnfFormula::next(convert(f.lhs(), negated));
  case Op::Until:
    return NnfFormula::binary(negated ? K::Release : K::Until, convert(f.lhs(), negated),
                              convert(f.rhs(), negated));
  }
  return NnfFormula::truth();
}

} // namespace

NnfFormula to_nnf(const Formula& f) { return convert(f, false); }

std::string to_string(const NnfFormula& f) {
  switch (f.kind()) {
  case K::True: return "true";
  case K::False: return "false";
  case K::Lit: return (f.positive() ? "" : "!") + f.prop();
  case K::Next: return "X " + to_string(f.lhs());
  case K::And: return "(" + to_string(f.lhs()) + " & " + to_string(f.rhs()) + ")";
  case K::Or: return "(" + to_string(f.lhs()) + " | " + to_string(f.rhs()) + ")";
  case K::Until: return "(" + to_string(f.lhs()) + " U " + to_string(f.rhs()) + ")";
  case K::Release: return "(" + to_string(f.lhs()) + " R " + to_string(f.rhs()) + ")";
  }
  return "?";
}

} // namespace ltl3
