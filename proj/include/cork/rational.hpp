#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cork {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses `p`, `-p` or `p/q`. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise (lowest terms, positive denominator).
std::string to_string(const Rational& value);

/// -1, 0 or +1.
int sign(const Rational& value);

/// Narrowing that throws if the value is not an integer in int64 range.
std::int64_t to_int64(const Rational& value);

}  // namespace cork
