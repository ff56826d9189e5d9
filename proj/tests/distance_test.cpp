#include "dopetest/distance.hpp"
#include "dopetest/errors.hpp"

#include <gtest/gtest.h>

using namespace dopetest;

TEST(InputDistance, AbsoluteDifferenceOfLastInputs)
{
    EXPECT_EQ(d_in_last(projected_symbol::input("30"_d), projected_symbol::input("18"_d)), distance{"12"_d});
    EXPECT_EQ(d_in_last(projected_symbol::masked_input(), projected_symbol::masked_input()), distance{decimal{}});
    EXPECT_EQ(d_in_last(projected_symbol::input("5"_d), projected_symbol::masked_input()), distance::infinity());
}

TEST(InputDistance, RejectsOutputSide)
{
    EXPECT_THROW((void)d_in_last(projected_symbol::output("1"_d), projected_symbol::input("1"_d)), domain_error);
}

TEST(OutputDistance, QuiescenceOnlyMatchesQuiescence)
{
    EXPECT_EQ(d_out_delta(symbol::quiescence(), symbol::quiescence()), distance{decimal{}});
    EXPECT_EQ(d_out_delta(symbol::output("1"_d), symbol::quiescence()), distance::infinity());
    EXPECT_EQ(d_out_delta(symbol::output("584"_d), symbol::output("180"_d)), distance{"404"_d});
    EXPECT_EQ(d_out_delta(projected_symbol::masked_output(), projected_symbol::masked_output()), distance{decimal{}});
    EXPECT_EQ(d_out_delta(projected_symbol::masked_output(), projected_symbol::output("1"_d)), distance::infinity());
}

TEST(OutputDistance, RejectsInputSide)
{
    EXPECT_THROW((void)d_out_delta(symbol::input("1"_d), symbol::output("1"_d)), domain_error);
}

TEST(Distance, InfinityIsAbsorbingAndLargest)
{
    EXPECT_GT(distance::infinity(), distance{"1000000"_d});
    EXPECT_EQ(distance{"1"_d} + distance::infinity(), distance::infinity());
    EXPECT_EQ(distance::infinity().to_string(), "inf");
}

TEST(PrefixInputs, ChecksEveryPosition)
{
    const projected_trace sigma{projected_symbol::input("1"_d)};
    EXPECT_TRUE(prefix_inputs_within({symbol::input("1.1"_d)}, sigma, "0.2"_d));
    EXPECT_FALSE(prefix_inputs_within({symbol::input("3"_d)}, sigma, "0.2"_d));
    EXPECT_TRUE(prefix_inputs_within({symbol::input("1"_d), symbol::output("2"_d)},
                                     {projected_symbol::input("1"_d), projected_symbol::masked_input()}, decimal{}));
}
