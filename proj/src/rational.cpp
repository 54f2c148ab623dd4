#include "aggtree/rational.hpp"

#include <charconv>
#include <cstdlib>

#include "aggtree/errors.hpp"

namespace aggtree {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw InvalidInput("not a number: '" + std::string(whole) + "'");
  }
  return value;
}

std::int64_t pow10(int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidInput("not a number: ''");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = text.front() == '-';
    auto int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    auto frac_part = text.substr(dot + 1);
    if (frac_part.size() > 12) throw InvalidInput("too many decimals: '" + std::string(text) + "'");
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (frac < 0) throw InvalidInput("not a number: '" + std::string(text) + "'");
    Rational value = Rational(whole) + Rational(frac, pow10(static_cast<int>(frac_part.size())));
    return negative ? -value : value;
  }
  return Rational(parse_int(text, text));
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string format_decimal(const Rational& value, int digits) {
  Rational scaled = value * Rational(pow10(digits));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  // round half up on the magnitude
  std::int64_t units = (scaled.numerator() * 2 + scaled.denominator()) / (2 * scaled.denominator());
  std::string text = std::to_string(units);
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, ".");
  }
  if (negative && units != 0) text.insert(0, "-");
  return text;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidInput("ceil_div: non-positive divisor");
  if (num >= 0) return (num + den - 1) / den;
  return -((-num) / den);
}

}  // namespace aggtree
