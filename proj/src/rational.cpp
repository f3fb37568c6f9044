#include "zrank/rational.hpp"

#include "zrank/error.hpp"

namespace zrank {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-')
    throw ParseError("malformed fraction '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw InvariantError("zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

}  // namespace zrank
