#include "ltl3/parser.hpp"

#include "ltl3/error.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ltl3 {
namespace {

enum class Tok { End, Ident, Not, And, Or, Arrow, LParen, RParen };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size())
      return t;
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    switch (c) {
    case '!': return single(Tok::Not);
    case '&': return single(Tok::And);
    case '|': return single(Tok::Or);
    case '(': return single(Tok::LParen);
    case ')': return single(Tok::RParen);
    case '-':
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        t.kind = Tok::Arrow;
        t.text = "->";
        return t;
      }
      break;
    default:
      break;
    }
    auto uc = static_cast<unsigned char>(c);
    if (std::isalpha(uc) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size()) {
        auto d = static_cast<unsigned char>(src_[pos_]);
        if (!(std::isalnum(d) || d == '_'))
          break;
        advance();
      }
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    std::string shown = std::isprint(uc) ? std::string(1, c) : "\\x" + hex(uc);
    throw ParseError("unexpected character '" + shown + "'", line_, column_);
  }

private:
  static std::string hex(unsigned char c) {
    const char* digits = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 15]};
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
public:
  Parser(std::string_view src, std::size_t max_depth) : lex_(src), max_depth_(max_depth) {
    cur_ = lex_.next();
  }

  Formula parse_all() {
    Formula f = parse_impl();
    if (cur_.kind != Tok::End)
      fail("unexpected '" + cur_.text + "' after complete formula");
    return f;
  }

private:
  bool is_kw(const char* kw) const { return cur_.kind == Tok::Ident && cur_.text == kw; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.column);
  }

  void shift() { cur_ = lex_.next(); }

  struct Guard {
    Parser& p;
    explicit Guard(Parser& parser) : p(parser) {
      if (++p.depth_ > p.max_depth_)
        p.fail("formula nested deeper than " + std::to_string(p.max_depth_));
    }
    ~Guard() { --p.depth_; }
  };

  Formula parse_impl() {
    Guard g(*this);
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Arrow) {
      shift();
      Formula rhs = parse_impl();
      return implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    std::size_t chain = 0;
    while (cur_.kind == Tok::Or) {
      shift();
      Formula rhs = parse_and();
      lhs = lor(std::move(lhs), std::move(rhs));
      check_chain(++chain);
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_until();
    std::size_t chain = 0;
    while (cur_.kind == Tok::And) {
      shift();
      Formula rhs = parse_until();
      lhs = land(std::move(lhs), std::move(rhs));
      check_chain(++chain);
    }
    return lhs;
  }

  Formula parse_until() {
    Guard g(*this);
    Formula lhs = parse_unary();
    if (is_kw("U")) {
      shift();
      Formula rhs = parse_until();
      return until(std::move(lhs), std::move(rhs));
    }
    if (is_kw("R")) {
      shift();
      Formula rhs = parse_until();
      return release(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_unary() {
    // Prefix chains are collected iteratively so "!!!!...a" cannot exhaust the stack.
    std::vector<char> prefix;
    for (;;) {
      if (cur_.kind == Tok::Not)
        prefix.push_back('!');
      else if (is_kw("X"))
        prefix.push_back('X');
      else if (is_kw("F"))
        prefix.push_back('F');
      else if (is_kw("G"))
        prefix.push_back('G');
      else
        break;
      check_chain(prefix.size() + depth_);
      shift();
    }
    Formula f = parse_primary();
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
      switch (*it) {
      case '!': f = lnot(std::move(f)); break;
      case 'X': f = next(std::move(f)); break;
      case 'F': f = eventually(std::move(f)); break;
      default: f = always(std::move(f)); break;
      }
    }
    return f;
  }

  Formula parse_primary() {
    switch (cur_.kind) {
    case Tok::LParen: {
      shift();
      Formula f = parse_impl();
      if (cur_.kind != Tok::RParen)
        fail(cur_.kind == Tok::End ? "missing ')'" : "expected ')' but found '" + cur_.text + "'");
      shift();
      return f;
    }
    case Tok::Ident: {
      if (cur_.text == "true") {
        shift();
        return top();
      }
      if (cur_.text == "false") {
        shift();
        return bottom();
      }
      if (is_reserved_word(cur_.text))
        fail("reserved word '" + cur_.text + "' cannot be used as a proposition");
      Formula f = atom(cur_.text);
      shift();
      return f;
    }
    case Tok::End:
      fail("unexpected end of input; expected a formula");
    default:
      fail("unexpected '" + cur_.text + "'; expected a formula");
    }
  }

  void check_chain(std::size_t n) const {
    if (n > max_depth_)
      fail("formula nested deeper than " + std::to_string(max_depth_));
  }

  Lexer lex_;
  Token cur_;
  std::size_t max_depth_;
  std::size_t depth_ = 0;
};

} // namespace

Formula parse(std::string_view text, std::size_t max_depth) {
  Parser p(text, max_depth);
  return p.parse_all();
}

} // namespace ltl3
