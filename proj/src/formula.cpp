#include "ltl3/formula.hpp"

#include <array>
#include <cctype>
#include <vector>

namespace ltl3 {

Formula::Node::~Node() {
  std::vector<std::shared_ptr<const Node>> pending;
  pending.push_back(std::move(lhs.node_));
  pending.push_back(std::move(rhs.node_));
  while (!pending.empty()) {
    std::shared_ptr<const Node> n = std::move(pending.back());
    pending.pop_back();
    if (n && n.use_count() == 1) {
      pending.push_back(std::move(n->lhs.node_));
      pending.push_back(std::move(n->rhs.node_));
    }
  }
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_binary(Op op) { return op == Op::And || op == Op::Or || op == Op::Until; }

} // namespace

Formula Formula::make(Op op, std::string name, const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  std::size_t h = std::hash<int>{}(static_cast<int>(op) + 1);
  if (op == Op::Atom)
    h = mix(h, std::hash<std::string>{}(n->name));
  if (a) {
    n->lhs = *a;
    n->size += a->size();
    h = mix(h, a->hash());
  }
  if (b) {
    n->rhs = *b;
    n->size += b->size();
    h = mix(h, b->hash());
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula::Formula() : Formula(top()) {}

const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }

bool Formula::is_bottom() const noexcept {
  return op() == Op::Not && node_->lhs.op() == Op::Top;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.op() != b.op())
    return false;
  switch (a.op()) {
  case Op::Top:
    return true;
  case Op::Atom:
    return a.name() == b.name();
  case Op::Not:
  case Op::Next:
    return a.lhs() == b.lhs();
  default:
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

Formula top() {
  static const Formula t = Formula::make(Op::Top, {}, nullptr, nullptr);
  return t;
}

Formula bottom() {
  static const Formula f = lnot(top());
  return f;
}

Formula atom(std::string name) { return Formula::make(Op::Atom, std::move(name), nullptr, nullptr); }
Formula lnot(Formula f) { return Formula::make(Op::Not, {}, &f, nullptr); }
Formula land(Formula a, Formula b) { return Formula::make(Op::And, {}, &a, &b); }
Formula lor(Formula a, Formula b) { return Formula::make(Op::Or, {}, &a, &b); }
Formula next(Formula f) { return Formula::make(Op::Next, {}, &f, nullptr); }
Formula until(Formula a, Formula b) { return Formula::make(Op::Until, {}, &a, &b); }

Formula implies(Formula a, Formula b) { return lor(lnot(std::move(a)), std::move(b)); }
Formula eventually(Formula f) { return until(top(), std::move(f)); }
Formula always(Formula f) { return lnot(until(top(), lnot(std::move(f)))); }
Formula release(Formula a, Formula b) {
  return lnot(until(lnot(std::move(a)), lnot(std::move(b))));
}

namespace {

const char* symbol(Op op) {
  switch (op) {
  case Op::And: return " & ";
  case Op::Or: return " | ";
  case Op::Until: return " U ";
  default: return "";
  }
}

void render_to(const Formula& f, std::string& out);

void render_operand(const Formula& child, bool parens, std::string& out) {
  if (parens)
    out += '(';
  render_to(child, out);
  if (parens)
    out += ')';
}

void render_to(const Formula& f, std::string& out) {
  switch (f.op()) {
  case Op::Top:
    out += "true";
    return;
  case Op::Atom:
    out += f.name();
    return;
  case Op::Not:
    out += '!';
    render_operand(f.lhs(), is_binary(f.lhs().op()), out);
    return;
  case Op::Next:
    out += "X ";
    render_operand(f.lhs(), is_binary(f.lhs().op()), out);
    return;
  case Op::And:
  case Op::Or:
  case Op::Until: {
    const Op op = f.op();
    const bool right_assoc = op == Op::Until;
    const Op l = f.lhs().op();
    const Op r = f.rhs().op();
    render_operand(f.lhs(), is_binary(l) && !(l == op && !right_assoc), out);
    out += symbol(op);
    render_operand(f.rhs(), is_binary(r) && !(r == op && right_assoc), out);
    return;
  }
  }
}

void collect_props(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
  case Op::Top:
    return;
  case Op::Atom:
    out.insert(f.name());
    return;
  case Op::Not:
  case Op::Next:
    collect_props(f.lhs(), out);
    return;
  default:
    collect_props(f.lhs(), out);
    collect_props(f.rhs(), out);
  }
}

} // namespace

std::string render(const Formula& f) {
  std::string out;
  render_to(f, out);
  return out;
}

std::set<std::string> props(const Formula& f) {
  std::set<std::string> out;
  collect_props(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

bool is_reserved_word(std::string_view word) {
  static constexpr std::array<std::string_view, 7> reserved{"true", "false", "X", "F", "G", "U", "R"};
  for (auto r : reserved)
    if (r == word)
      return true;
  return false;
}

bool is_valid_prop_name(std::string_view name) {
  if (name.empty())
    return false;
  auto c0 = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(c0) || c0 == '_'))
    return false;
  for (char ch : name) {
    auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_'))
      return false;
  }
  return !is_reserved_word(name);
}

} // namespace ltl3
