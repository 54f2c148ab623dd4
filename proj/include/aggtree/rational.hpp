#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace aggtree {

/// Exact energy/length arithmetic. Costs pass through ceilings, so floats are
/// never used for anything that is compared.
using Rational = boost::rational<std::int64_t>;

/// Accepts "7", "7/2" and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);

/// "7" for integers, "7/2" otherwise.
std::string format_rational(const Rational& value);

/// Fixed-point rendering with `digits` fractional digits, rounded half up.
std::string format_decimal(const Rational& value, int digits);

std::int64_t ceil_div(std::int64_t num, std::int64_t den);

inline double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

}  // namespace aggtree
