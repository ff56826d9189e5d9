#include "dopetest/decimal.hpp"
#include "dopetest/errors.hpp"

#include <gtest/gtest.h>

using namespace dopetest;

TEST(Decimal, ParsesAndRendersShortestForm)
{
    EXPECT_EQ(decimal::parse("1.50").to_string(), "1.5");
    EXPECT_EQ(decimal::parse("-3").to_string(), "-3");
    EXPECT_EQ(decimal::parse("0.001").to_string(), "0.001");
    EXPECT_EQ(decimal::parse("+2.25").units(), 2'250'000);
    EXPECT_EQ("1.25"_d, decimal::parse("1.25"));
}

TEST(Decimal, RejectsMalformedText)
{
    EXPECT_THROW((void)decimal::parse(""), parse_error);
    EXPECT_THROW((void)decimal::parse("1.2.3"), parse_error);
    EXPECT_THROW((void)decimal::parse("abc"), parse_error);
    EXPECT_THROW((void)decimal::parse("."), parse_error);
}

TEST(Decimal, ArithmeticIsExact)
{
    EXPECT_EQ("0.1"_d + "0.2"_d, "0.3"_d);
    EXPECT_EQ("204"_d - "180"_d, decimal::from_integer(24));
    EXPECT_EQ(abs("180"_d - "584"_d), "404"_d);
}

TEST(Decimal, CountsDecimalPlaces)
{
    EXPECT_EQ("8.123"_d.decimal_places(), 3);
    EXPECT_EQ("8.10"_d.decimal_places(), 1);
    EXPECT_EQ("3"_d.decimal_places(), 0);
}

TEST(Decimal, OrdersNumerically)
{
    EXPECT_LT("-1"_d, "0.5"_d);
    EXPECT_LT("1.999999"_d, "2"_d);
}
