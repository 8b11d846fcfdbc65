#include "g1inv/rational.hpp"

#include "g1inv/errors.hpp"

#include <cctype>

namespace g1inv {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
        }
    }
    std::string digits(text.substr(start));
    Integer value(digits);
    return text[0] == '-' ? Integer(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    if (is_integer(value)) {
        return boost::multiprecision::numerator(value).str();
    }
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

Rational pow(const Rational& base, int k) {
    if (k < 0) {
        if (base == 0) {
            throw InvalidInput("negative power of zero");
        }
        return 1 / pow(base, -k);
    }
    Rational result = 1;
    Rational b = base;
    while (k > 0) {
        if (k & 1) result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

int mod2(const Rational& value) {
    if (!is_integer(value)) {
        throw InvalidInput("mod 2 reduction needs an integer, got " + to_string(value));
    }
    const Integer n = boost::multiprecision::numerator(value);
    return static_cast<int>(boost::multiprecision::abs(n) % 2);
}

} // namespace g1inv
