#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace ltl3 {

/// Primitive constructors of the abstract syntax. Everything else
/// (false, ->, F, G, R) is sugar removed by the parser.
enum class Op : unsigned char { Top, Atom, Not, And, Or, Next, Until };

/// Immutable LTL formula. Copies share structure; equality is structural.
///
/// Size and hash are computed once at construction, so comparing or hashing
/// large formulas produced by progression stays cheap.
class Formula {
public:
  Formula(); // true

  Op op() const noexcept;
  /// Proposition name; empty unless op() == Op::Atom.
  const std::string& name() const noexcept;
  /// First operand of Not/Next, left operand of binary operators.
  const Formula& lhs() const;
  /// Right operand of And/Or/Until.
  const Formula& rhs() const;

  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  bool is_top() const noexcept;
  /// The canonical false is Not(Top).
  bool is_bottom() const noexcept;

  /// True when both handles point at the same node.
  bool same_node(const Formula& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  friend Formula top();
  friend Formula atom(std::string name);
  friend Formula lnot(Formula f);
  friend Formula land(Formula a, Formula b);
  friend Formula lor(Formula a, Formula b);
  friend Formula next(Formula f);
  friend Formula until(Formula a, Formula b);

private:
  struct Node;
  friend struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::string name;
  // Mutable so the destructor can detach children and unwind deep chains
  // without recursion.
  mutable Formula lhs{nullptr};
  mutable Formula rhs{nullptr};
  std::size_t size = 1;
  std::size_t hash = 0;

  ~Node();
};

inline Op Formula::op() const noexcept { return node_->op; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline std::size_t Formula::size() const noexcept { return node_->size; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }
inline bool Formula::is_top() const noexcept { return op() == Op::Top; }

Formula top();
Formula bottom();
Formula atom(std::string name);
Formula lnot(Formula f);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula next(Formula f);
Formula until(Formula a, Formula b);

// Derived forms, expanded exactly as the parser expands them.
Formula implies(Formula a, Formula b);   // !a | b
Formula eventually(Formula f);           // true U f
Formula always(Formula f);               // !(true U !f)
Formula release(Formula a, Formula b);   // !(!a U !b)

/// Prints primitives only. Unary operators bind tightest; a binary operand
/// of a different binary operator is parenthesized; chains of the same
/// operator follow the parser's associativity. parse(render(f)) == f.
std::string render(const Formula& f);

/// Atoms occurring in f.
std::set<std::string> props(const Formula& f);

/// Number of constructors in the tree.
inline std::size_t size(const Formula& f) { return f.size(); }

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// A proposition name is an identifier that is not a reserved word.
bool is_valid_prop_name(std::string_view name);
bool is_reserved_word(std::string_view word);

} // namespace ltl3

template <>
struct std::hash<ltl3::Formula> {
  std::size_t operator()(const ltl3::Formula& f) const noexcept { return f.hash(); }
};
