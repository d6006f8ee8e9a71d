#ifndef WREATHMAC_DETAIL_EXPR_PARSER_HPP
#define WREATHMAC_DETAIL_EXPR_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "wreathmac/errors.hpp"
#include "wreathmac/poly2.hpp"

namespace wreathmac::detail {

// Recursive-descent parser for  + - * / ^ ( )  expressions over integers and
// identifiers. Ops supplies: from_int, ident(name, pos), divide(a, b, pos),
// power(a, k, pos).
template <class Value, class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

  Value parse() {
    Value v = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return v;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      skip();
      std::size_t pos = i_;
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        v = ops_.divide(v, unary(), pos);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    skip();
    std::size_t pos = i_;
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected integer exponent", i_);
    if (i_ - start > 6) throw ParseError("exponent too large", start);
    long k = std::stol(std::string(s_.substr(start, i_ - start)));
    return ops_.power(base, neg ? -k : k, pos);
  }

  Value atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Value v = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return ops_.from_int(BigInt(std::string(s_.substr(start, i_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return ops_.ident(s_.substr(start, i_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  Ops& ops_;
};

}  // namespace wreathmac::detail

#endif
