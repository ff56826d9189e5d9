#include "builders.hpp"

#include "dopetest/errors.hpp"
#include "dopetest/lts.hpp"
#include "dopetest/lts_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace dopetest;
using support::lts_from_text;
using support::trace_of;

namespace {

std::set<std::string> delta_states(const lts& l)
{
    std::set<std::string> out;
    for (state_id s = 0; s < l.state_count(); ++s)
        for (const auto& t : l.transitions_from(s))
            if (t.label.is_quiescence() && t.target == s)
                out.insert(l.name(s));
    return out;
}

} // namespace

TEST(Closure, AddsQuiescenceLoopsWhereNoOutputLeaves)
{
    const standard_lts s = quiescence_closure(lts_from_text(support::branching_text));
    EXPECT_TRUE(s.closed());
    EXPECT_EQ(delta_states(s.system()), (std::set<std::string>{"s0", "s4", "s5", "s6"}));
}

TEST(Closure, LeavesStatesWithOutputsAlone)
{
    const standard_lts s = quiescence_closure(lts_from_text("s0\to:1\ts0\n"));
    EXPECT_EQ(s.system().transition_count(), 1U);
}

TEST(Closure, IsIdempotent)
{
    const standard_lts once = quiescence_closure(lts_from_text(support::branching_text));
    const standard_lts twice = quiescence_closure(once.system());
    EXPECT_EQ(once.system().transition_count(), twice.system().transition_count());
    EXPECT_EQ(delta_states(once.system()), delta_states(twice.system()));
}

TEST(Closure, TerminalClosureLoopsOnlyAtDeadEnds)
{
    const standard_lts s = terminal_closure(lts_from_text("s0\ti:1\ts1\ns1\to:1\ts2\n"));
    EXPECT_EQ(delta_states(s.system()), std::set<std::string>{"s2"});
}

TEST(TracesExact, SingleExchangeContinuesWithQuiescence)
{
    const standard_lts s = quiescence_closure(lts_from_text("s0\ti:1\ts1\ns1\to:1\ts2\n"));
    // s0 also gets a loop because no output leaves it.
    EXPECT_TRUE(traces_exact(s, 3).contains(trace_of({"i:1", "o:1", "q"})));
    EXPECT_EQ(traces_exact(s, 0), std::set<trace>{trace{}});
}

TEST(TracesExact, BranchingStandardAtLengthOne)
{
    const standard_lts s = quiescence_closure(lts_from_text(support::branching_text));
    EXPECT_EQ(traces_exact(s, 1), (std::set<trace>{trace_of({"i:2"}), trace_of({"i:3"}), trace_of({"q"})}));
}

TEST(TracesExact, RequiresClosedStandard)
{
    const standard_lts open{lts_from_text("s0\ti:1\ts1\n"), false};
    EXPECT_THROW((void)traces_exact(open, 1), domain_error);
}

TEST(TracesExact, HonoursNodeBudget)
{
    const standard_lts s = quiescence_closure(lts_from_text(support::branching_text));
    EXPECT_THROW((void)traces_exact(s, 6, 3), resource_error);
}

TEST(After, FollowsTraces)
{
    const standard_lts s = quiescence_closure(lts_from_text("s0\ti:1\ts1\ns1\to:1\ts2\n"));
    const lts& l = s.system();
    EXPECT_EQ(after(s, {}), std::set<state_id>{l.initial()});
    EXPECT_EQ(after(s, trace_of({"i:1"})), std::set<state_id>{*l.find_state("s1")});
    EXPECT_TRUE(after(s, trace_of({"i:9"})).empty());
}

TEST(OutSet, ReadsOutputsAndQuiescence)
{
    const standard_lts s = quiescence_closure(lts_from_text(support::branching_text));
    const lts& l = s.system();
    EXPECT_EQ(out_set(s, {*l.find_state("s4")}), std::set<symbol>{symbol::quiescence()});
    EXPECT_TRUE(out_set(s, {}).empty());
    EXPECT_EQ(out_set(s, {*l.find_state("s3")}), std::set<symbol>{symbol::output("3"_d)});
    EXPECT_EQ(out_set(s, after(s, trace_of({"i:2"}))), (std::set<symbol>{symbol::output("2"_d), symbol::output("3"_d)}));
}

TEST(StandardFor, IsReflexive)
{
    const lts l = lts_from_text(support::branching_text);
    EXPECT_TRUE(is_standard_for(l, l, 4).holds);
}

TEST(StandardFor, DetectsMissingTraceWithSharedInputs)
{
    const lts impl = lts_from_text("s0\ti:1\ts1\ns1\to:9\ts2\ns0\ti:1\ts3\ns3\to:1\ts4\n");
    const lts candidate = lts_from_text("s0\ti:1\ts1\ns1\to:1\ts2\n");
    const auto r = is_standard_for(candidate, impl, 2);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(*r.counterexample, trace_of({"i:1", "o:9"}));
}

TEST(StandardFor, HoldsVacuouslyWithoutSharedInputs)
{
    const lts impl = lts_from_text("s0\ti:1\ts1\ns1\to:9\ts2\n");
    const lts candidate = lts_from_text("s0\ti:2\ts1\ns1\to:1\ts2\n");
    EXPECT_TRUE(is_standard_for(candidate, impl, 2).holds);
}

TEST(LtsIo, RoundTrips)
{
    const lts l = lts_from_text("# comment\ninitial s0\ninput 7\ns0\ti:1\ts1\ns1\to:2\ts0\n");
    EXPECT_TRUE(l.inputs().contains("7"_d));
    std::ostringstream out;
    write_lts(out, l);
    const lts back = lts_from_text(out.str());
    EXPECT_EQ(back.state_count(), l.state_count());
    EXPECT_EQ(back.transition_count(), l.transition_count());
    EXPECT_EQ(back.inputs(), l.inputs());
    EXPECT_EQ(back.name(back.initial()), "s0");
}

TEST(LtsIo, ReportsLineOfMalformedInput)
{
    try {
        (void)lts_from_text("s0\ti:1\ts1\nbroken line\n");
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 2U);
    }
}
