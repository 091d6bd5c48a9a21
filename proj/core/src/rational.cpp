#include "bfh/rational.hpp"

namespace bfh {

std::string to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (!is_integer(r)) {
    out += "/";
    out += denominator(r).str();
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto parse_int = [](std::string_view s) -> Integer {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) throw ParseError("sign without digits");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9')
        throw ParseError("bad integer literal: " + std::string(s));
    }
    return Integer(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: " + std::string(text));
  return Rational(num, den);
}

}  // namespace bfh
