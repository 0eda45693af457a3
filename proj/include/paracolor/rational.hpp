#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace paracolor {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& q);

// Accepts "p", "-p", "p/q" with arbitrary precision integers.
Rational parse_rational(std::string_view text);

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace paracolor
