#include "random_contracts.hpp"

#include "dopetest/distance.hpp"
#include "dopetest/engine.hpp"
#include "dopetest/reference.hpp"
#include "dopetest/satisfiability.hpp"
#include "dopetest/strategies.hpp"
#include "dopetest/sut.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dopetest;

namespace {

projected_symbol random_input_side(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> value{0, 100};
    if (std::bernoulli_distribution{0.25}(rng))
        return projected_symbol::masked_input();
    return projected_symbol::input(decimal::from_units(value(rng) * 500'000));
}

projected_symbol random_output_side(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> value{0, 100};
    std::uniform_int_distribution<int> kind{0, 3};
    switch (kind(rng)) {
    case 0:
        return projected_symbol::masked_output();
    case 1:
        return projected_symbol::quiescence();
    default:
        return projected_symbol::output(decimal::from_units(value(rng) * 500'000));
    }
}

} // namespace

TEST(Properties, InputDistanceIsPseudometric)
{
    std::mt19937_64 rng{1};
    for (int n = 0; n < 5000; ++n) {
        const auto a = random_input_side(rng);
        const auto b = random_input_side(rng);
        const auto c = random_input_side(rng);
        EXPECT_EQ(d_in_last(a, a), distance{decimal{}});
        EXPECT_EQ(d_in_last(a, b), d_in_last(b, a));
        EXPECT_LE(d_in_last(a, b), d_in_last(a, c) + d_in_last(c, b));
    }
}

TEST(Properties, OutputDistanceIsPseudometric)
{
    std::mt19937_64 rng{2};
    for (int n = 0; n < 5000; ++n) {
        const auto a = random_output_side(rng);
        const auto b = random_output_side(rng);
        const auto c = random_output_side(rng);
        EXPECT_EQ(d_out_delta(a, a), distance{decimal{}});
        EXPECT_EQ(d_out_delta(a, b), d_out_delta(b, a));
        EXPECT_LE(d_out_delta(a, b), d_out_delta(a, c) + d_out_delta(c, b));
    }
}

TEST(Properties, QuiescenceIsInfinitelyFarFromOutputs)
{
    for (int v = -50; v <= 50; ++v) {
        const decimal x = decimal::from_units(v * 100'000);
        EXPECT_EQ(d_out_delta(symbol::quiescence(), symbol::output(x)), distance::infinity());
    }
}

TEST(Properties, ClosureIsIdempotent)
{
    std::mt19937_64 rng{3};
    for (int n = 0; n < 100; ++n) {
        const contract c = support::random_contract(rng);
        const lts& once = c.standard().system();
        const lts twice = quiescence_closure(once).system();
        EXPECT_EQ(once.transition_count(), twice.transition_count());
        EXPECT_EQ(enumerate_traces_upto(once, 3), enumerate_traces_upto(twice, 3));
    }
}

TEST(Properties, ProjectionsPreserveLength)
{
    std::mt19937_64 rng{4};
    for (int n = 0; n < 50; ++n) {
        const contract c = support::random_contract(rng);
        for (const auto& t : enumerate_traces_upto(c.standard().system(), 4)) {
            EXPECT_EQ(project_inputs(t).size(), t.size());
            EXPECT_EQ(project_outputs(t).size(), t.size());
        }
    }
}

TEST(Properties, PassSurvivesTruncation)
{
    std::mt19937_64 rng{6};
    int checked = 0;
    for (int n = 0; n < 60; ++n) {
        const contract c = support::random_contract(rng);
        const std::size_t b = 4;
        if (!check_satisfiable_bounded(c, b).satisfiable)
            continue;
        const bounded_reference ref = build_reference_bounded(c, b);
        lts_player player{ref.to_lts(), static_cast<std::uint64_t>(n)};
        random_strategy chooser{case_weights{0, 0.6, 0.4}, static_cast<std::uint64_t>(n)};
        const verdict full = dt_run(c, player, chooser, b);
        ASSERT_NE(full.result, outcome::fail);
        for (std::size_t a = 1; a <= b; ++a) {
            const trace cut = prefix(full.history, std::min(a, full.history.size()));
            replay_sut sut{cut};
            replay_strategy replay{cut};
            EXPECT_NE(dt_run(c, sut, replay, a).result, outcome::fail) << to_string(cut);
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}
