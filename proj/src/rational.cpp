#include "kantorovich/rational.hpp"

#include <cctype>

#include "kantorovich/errors.hpp"

namespace kantorovich {
namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

boost::multiprecision::mpz_int parse_integer(std::string_view text, std::string_view whole) {
  if (!is_integer_literal(text)) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return boost::multiprecision::mpz_int(digits);
}

}  // namespace

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  auto num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "': negative denominator");
  }
  auto den = parse_integer(den_text, text);
  if (den == 0) {
    throw ParseError("malformed rational '" + std::string(text) + "': zero denominator");
  }
  return Rational(num) / Rational(den);
}

}  // namespace kantorovich
