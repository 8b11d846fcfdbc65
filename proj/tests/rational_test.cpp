#include "g1inv/errors.hpp"
#include "g1inv/rational.hpp"

#include <gtest/gtest.h>

using namespace g1inv;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("42"), Rational(42));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-10/-4"), Rational(5, 2));
    EXPECT_EQ(parse_rational("123456789012345678901234567890"),
              Rational(Integer("123456789012345678901234567890")));
}

TEST(Rational, RejectsGarbage) {
    EXPECT_THROW(parse_rational(""), InvalidInput);
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("1.5"), InvalidInput);
    EXPECT_THROW(parse_rational("abc"), InvalidInput);
    EXPECT_THROW(parse_rational("1/2/3"), InvalidInput);
}

TEST(Rational, PrintsReduced) {
    EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(Rational(-6, 3)), "-2");
    EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, PowersAndParity) {
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(pow(Rational(5), 0), Rational(1));
    EXPECT_EQ(mod2(Rational(-3)), 1);
    EXPECT_EQ(mod2(Rational(4)), 0);
    EXPECT_TRUE(is_integer(Rational(8, 4)));
    EXPECT_FALSE(is_integer(Rational(1, 2)));
}
