#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "lcforge/errors.hpp"
#include "lcforge/polynomial.hpp"

namespace lcforge {

namespace detail {

/// Recursive-descent parser for polynomial expressions:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer ('/' integer)? | identifier | '(' expr ')'
class ExpressionParser {
 public:
  static constexpr int kMaxExponent = 64;

  ExpressionParser(std::string_view text, RingPtr ring, std::size_t line, std::size_t column)
      : text_(text), ring_(std::move(ring)), line_(line), column_(column) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    auto p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    auto acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }
  Polynomial term() {
    auto acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }
  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Polynomial power() {
    auto base = atom();
    if (!accept('^')) return base;
    skip_space();
    auto digits = integer();
    if (digits.empty()) fail("expected exponent");
    if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) fail("exponent too large");
    int e = std::stoi(digits);
    auto acc = Polynomial::constant(ring_, 1);
    for (int k = 0; k < e; ++k) acc *= base;
    return acc;
  }
  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string literal = integer();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        auto den = integer();
        if (den.empty()) fail("expected denominator");
        literal += "/" + den;
      }
      try {
        return Polynomial::constant(ring_, FieldElement::parse(literal, ring_->field));
      } catch (const InvalidArgument& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t line_, column_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial expression over `ring`. `line`/`column` locate the
/// text inside a larger document for error messages.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                                   std::size_t column = 1) {
  return detail::ExpressionParser(text, ring, line, column).parse();
}

}  // namespace lcforge
