#include "cork/rational.hpp"

#include "cork/error.hpp"

#include <cctype>
#include <limits>

namespace cork {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) throw ParseError("denominator must be positive in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int sign(const Rational& value) { return value.sign(); }

std::int64_t to_int64(const Rational& value) {
  if (boost::multiprecision::denominator(value) != 1) throw Error("value " + to_string(value) + " is not an integer");
  const BigInt num = boost::multiprecision::numerator(value);
  if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
    throw Error("integer " + num.str() + " out of range");
  return num.convert_to<std::int64_t>();
}

}  // namespace cork
