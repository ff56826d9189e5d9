#include "brute_force.hpp"
#include "builders.hpp"
#include "random_contracts.hpp"

#include "dopetest/acceptance.hpp"
#include "dopetest/errors.hpp"

#include <gtest/gtest.h>

using namespace dopetest;
using support::trace_of;

namespace {

std::set<symbol> outputs(std::initializer_list<const char*> values)
{
    std::set<symbol> s;
    for (const char* v : values)
        s.insert(symbol::output(decimal::parse(v)));
    return s;
}

} // namespace

TEST(Acc, TubeAroundSingleOutput)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    const auto a = acc_b(c, trace_of({"i:1.1"}), 3);
    EXPECT_FALSE(a.vacuous);
    EXPECT_EQ(a.outputs, outputs({"0.5", "1", "1.5"}));
}

TEST(Acc, FarInputIsVacuous)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    const auto a = acc_b(c, trace_of({"i:3"}), 3);
    EXPECT_TRUE(a.vacuous);
    EXPECT_EQ(a.outputs.size(), static_cast<std::size_t>(c.output_domain().size()) + 1);
    EXPECT_TRUE(a.outputs.contains(symbol::quiescence()));
}

TEST(Acc, QuiescenceAfterTheExchange)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    EXPECT_EQ(acc_b(c, trace_of({"i:1", "o:1"}), 3).outputs, std::set<symbol>{symbol::quiescence()});
}

TEST(Acc, RejectsHistoriesAtTheBound)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    EXPECT_THROW((void)acc_b(c, trace_of({"i:1", "o:1"}), 2), bound_error);
}

TEST(Acc, BranchingStandardIntersectsLiveTubes)
{
    const contract c = support::example_branching();
    EXPECT_EQ(acc_b(c, trace_of({"i:1.5"}), 2).outputs, outputs({"1", "1.5", "2", "2.5", "3", "3.5", "4"}));
    EXPECT_EQ(acc_b(c, trace_of({"i:2.5"}), 2).outputs, outputs({"2", "2.5", "3", "3.5", "4"}));
}

TEST(AcceptanceOracle, CheckReportsWitnessOfFailingGroup)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    const acceptance_oracle oracle{c, 3};
    const auto bad = oracle.check(trace_of({"i:1.1"}), symbol::output("4"_d));
    EXPECT_FALSE(bad.accepted);
    ASSERT_TRUE(bad.witness);
    EXPECT_EQ(prefix(*bad.witness, 2), trace_of({"i:1", "o:1"}));
    EXPECT_TRUE(oracle.check(trace_of({"i:1.1"}), symbol::output("1.5"_d)).accepted);
    EXPECT_THROW((void)oracle.check({}, symbol::input("1"_d)), domain_error);
}

TEST(AcceptanceOracle, AdmissibleInputsStayInsideTubes)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    const acceptance_oracle oracle{c, 3};
    const interval_set ok = oracle.admissible_inputs({});
    ASSERT_EQ(ok.size(), 1U);
    EXPECT_EQ(ok.front().lo, "0.8"_d);
    EXPECT_EQ(ok.front().hi, "1.2"_d);
}

TEST(AcceptanceOracle, AgreesWithBruteForceOnRandomContracts)
{
    std::mt19937_64 rng{5};
    for (int n = 0; n < 30; ++n) {
        const contract c = support::random_contract(rng);
        const acceptance_oracle oracle{c, 3};
        const std::set<trace> histories = enumerate_traces(c.standard().system(), 2);
        for (const auto& h : histories)
            EXPECT_EQ(oracle.acc(h).outputs, support::brute_force_acc(c, h, 3)) << to_string(h);
    }
}
