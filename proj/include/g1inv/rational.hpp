#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace g1inv {

// Expression templates are disabled so that the number types behave as
// plain values inside Eigen containers and with `auto`.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "n", "-n" or "n/d" (whitespace not allowed). Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Decimal integer when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

/// Exact power with an integer exponent of either sign; zero base requires k >= 0.
Rational pow(const Rational& base, int k);

/// Reduction of an integral rational mod 2 (0 or 1). Throws InvalidInput otherwise.
int mod2(const Rational& value);

} // namespace g1inv
