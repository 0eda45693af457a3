#include "paracolor/rational.hpp"

#include <sstream>

#include "paracolor/errors.hpp"

namespace paracolor {

std::string rational_str(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  ensure(!s.empty(), ErrorKind::ParseError, "empty rational");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    ensure(ok, ErrorKind::ParseError, "bad rational '" + s + "'");
  }
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad rational '" + s + "'");
  }
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  const Int rn = boost::multiprecision::sqrt(num);
  const Int rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace paracolor
