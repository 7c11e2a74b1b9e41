#pragma once

#include "ltl3/formula.hpp"

#include <memory>
#include <string>

namespace ltl3 {

/// Negation normal form: negation only on literals, with Release as the dual
/// of Until. Internal to the automaton construction; the public Formula AST
/// has no Release.
class NnfFormula {
public:
  enum class Kind : unsigned char { True, False, Lit, And, Or, Next, Until, Release };

  static NnfFormula truth();
  static NnfFormula falsity();
  static NnfFormula lit(std::string prop, bool positive);
  static NnfFormula binary(Kind k, NnfFormula a, NnfFormula b);
  static NnfFormula next(NnfFormula a);

  Kind kind() const noexcept { return node_->kind; }
  const std::string& prop() const noexcept { return node_->prop; }
  bool positive() const noexcept { return node_->positive; }
  const NnfFormula& lhs() const { return *node_->a; }
  const NnfFormula& rhs() const { return *node_->b; }

  friend bool operator==(const NnfFormula& x, const NnfFormula& y);

private:
  struct Node {
    Kind kind;
    std::string prop;
    bool positive = true;
    std::shared_ptr<const NnfFormula> a;
    std::shared_ptr<const NnfFormula> b;
  };
  explicit NnfFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Pushes negations to the literals (De Morgan, !X a = X !a,
/// !(a U b) = !a R !b, !(a R b) = !a U !b).
NnfFormula to_nnf(const Formula& f);

/// Compact text form, e.g. "(!a R !b)".
std::string to_string(const NnfFormula& f);

} // namespace ltl3
