#include "birkhoff/poly_parse.hpp"

#include <algorithm>
#include <cctype>

#include "birkhoff/errors.hpp"

namespace birkhoff {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, bool allow_p)
      : s_(text), vars_(vars), allow_p_(allow_p) {}

  MultiPoly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    // Anything that could start another factor here is juxtaposition.
    skip();
    if (pos_ < s_.size() &&
        (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
      throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
    return acc;
  }

  MultiPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t at = pos_;
      const std::string digits = number();
      if (digits.empty()) throw ParseError("expected a nonnegative integer exponent", at);
      if (digits.size() > 4) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(number());
      if (eat('/')) {
        skip();
        const std::size_t at = pos_;
        const std::string den = number();
        if (den.empty()) throw ParseError("expected a denominator", at);
        Rational d(den);
        if (d == 0) throw ParseError("zero denominator", at);
        value /= d;
      }
      return MultiPoly(vars_, Coeff(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (allow_p_ && name == "p") return MultiPoly(vars_, Coeff::p());
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
        throw ParseError("unknown variable '" + name + "'", start);
      return MultiPoly::variable(vars_, name);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  bool allow_p_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, bool allow_p) {
  return Parser(text, vars, allow_p).parse();
}

Rational parse_rational(std::string_view text) {
  const MultiPoly v = parse_poly(text, {}, false);
  if (!v.is_constant()) throw ParseError("expected a rational constant", 0);
  return v.constant_term().constant();
}

}  // namespace birkhoff
