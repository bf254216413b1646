#include "xdm/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "xdm/error.hpp"
#include "xdm/interval.hpp"

namespace xdm {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  RealFn expression() {
    RealFn acc = term();
    for (;;) {
      if (eat('+')) {
        RealFn rhs = term();
        acc = [lhs = acc, rhs](double m) { return lhs(m) + rhs(m); };
      } else if (eat('-')) {
        RealFn rhs = term();
        acc = [lhs = acc, rhs](double m) { return lhs(m) - rhs(m); };
      } else {
        return acc;
      }
    }
  }

  RealFn term() {
    RealFn acc = unary();
    for (;;) {
      if (eat('*')) {
        RealFn rhs = unary();
        acc = [lhs = acc, rhs](double m) { return lhs(m) * rhs(m); };
      } else if (eat('/')) {
        RealFn rhs = unary();
        acc = [lhs = acc, rhs](double m) { return lhs(m) / rhs(m); };
      } else {
        return acc;
      }
    }
  }

  RealFn unary() {
    if (eat('-')) {
      RealFn inner = unary();
      return [inner](double m) { return -inner(m); };
    }
    if (eat('+')) return unary();
    return power();
  }

  RealFn power() {
    RealFn base = primary();
    if (eat('^')) {
      RealFn exponent = unary();
      return [base, exponent](double m) { return std::pow(base(m), exponent(m)); };
    }
    return base;
  }

  RealFn primary() {
    skip();
    XDM_REQUIRE(pos < text.size(), errc::parse_error,
                "unexpected end of expression");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      RealFn inner = expression();
      XDM_REQUIRE(eat(')'), errc::parse_error, "expected a closing parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = identifier();
      if (name == "mu") {
        return [](double m) { return m; };
      }
      if (name == "exp" || name == "log" || name == "sqrt") {
        XDM_REQUIRE(eat('('), errc::parse_error,
                    "expected ( after " + name);
        RealFn inner = expression();
        XDM_REQUIRE(eat(')'), errc::parse_error,
                    "expected a closing parenthesis");
        if (name == "exp")
          return [inner](double m) { return std::exp(inner(m)); };
        if (name == "log")
          return [inner](double m) { return std::log(inner(m)); };
        return [inner](double m) { return std::sqrt(inner(m)); };
      }
      raise(errc::parse_error, "unknown identifier: " + name);
    }
    raise(errc::parse_error, std::string("unexpected character: ") + c);
  }

  RealFn number() {
    const char* begin = text.c_str() + pos;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    XDM_REQUIRE(end != begin, errc::parse_error, "expected a number");
    pos += static_cast<std::size_t>(end - begin);
    return [value](double) { return value; };
  }

  std::string identifier() {
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

RealFn parse_slope_expression(const std::string& text) {
  Parser parser{text};
  RealFn fn = parser.expression();
  parser.skip();
  XDM_REQUIRE(parser.pos == text.size(), errc::parse_error,
              "trailing characters after expression: " + text.substr(parser.pos));
  return fn;
}

double parse_extended_real(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  XDM_REQUIRE(first != std::string::npos, errc::parse_error,
              "empty value where a number was expected");
  const std::string body = text.substr(first, last - first + 1);
  if (body == "inf" || body == "+inf") return kInf;
  if (body == "-inf") return -kInf;
  const char* begin = body.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  XDM_REQUIRE(end == begin + body.size() && end != begin, errc::parse_error,
              "not a number: " + body);
  return value;
}

}  // namespace xdm
