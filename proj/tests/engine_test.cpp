#include "builders.hpp"

#include "dopetest/contract_io.hpp"
#include "dopetest/engine.hpp"
#include "dopetest/strategies.hpp"
#include "dopetest/sut.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <sstream>

using namespace dopetest;
using support::trace_of;

namespace {

const std::filesystem::path fixtures{DOPETEST_FIXTURE_DIR};

contract noisy() { return load_contract(fixtures / "numbers" / "noisy.ini"); }

// Answers every input with a fixed value.
class constant_sut final : public sut_connection {
public:
    explicit constant_sut(decimal value) : value_{value} {}
    void send(decimal) override { pending_ = true; }
    std::optional<decimal> poll() override
    {
        if (!pending_)
            return std::nullopt;
        pending_ = false;
        return value_;
    }
    symbol receive(std::chrono::milliseconds) override
    {
        const auto o = poll();
        return o ? symbol::output(*o) : symbol::quiescence();
    }
    void reset() override { pending_ = false; }

private:
    decimal value_;
    bool pending_ = false;
};

// Accepts every input and never answers.
class silent_sut final : public sut_connection {
public:
    void send(decimal) override {}
    std::optional<decimal> poll() override { return std::nullopt; }
    symbol receive(std::chrono::milliseconds) override { return symbol::quiescence(); }
    void reset() override {}
};

std::vector<script_entry> script(std::initializer_list<const char*> entries)
{
    std::vector<script_entry> s;
    for (const char* e : entries)
        s.push_back(std::string_view{e} == "wait" ? script_entry{} : script_entry{decimal::parse(e)});
    return s;
}

} // namespace

TEST(Engine, ReplayOfStandardPasses)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    const trace t = trace_of({"i:1", "o:1", "q"});
    replay_sut sut{t};
    replay_strategy chooser{t};
    const verdict v = dt_run(c, sut, chooser, 4);
    EXPECT_EQ(v.result, outcome::pass);
    EXPECT_EQ(v.history, t);
}

TEST(Engine, DopedOutputFails)
{
    const contract c = support::make_contract({"s0\ti:1\ts1\ns1\to:1\ts2\ns0\ti:1\ts3\ns3\to:2\ts4\n",
                                               value_domain{"0"_d, "5"_d, "0.001"_d},
                                               value_domain{"0"_d, "10"_d, "0.001"_d}, "0.2"_d, "0.5"_d});
    constant_sut sut{"4.492"_d};
    scripted_strategy chooser{script({"1.123", "wait"})};
    const verdict v = dt_run(c, sut, chooser, 4);
    EXPECT_EQ(v.result, outcome::fail);
    EXPECT_EQ(v.history, trace_of({"i:1.123", "o:4.492"}));
    ASSERT_TRUE(v.witness);
    EXPECT_FALSE(v.witness->empty());
}

TEST(Engine, FarInputPassesTrivially)
{
    noisy_mirror sut{noisy_mirror_config{}};
    scripted_strategy chooser{script({"25"})};
    const verdict v = dt_run(noisy(), sut, chooser, 4);
    EXPECT_EQ(v.result, outcome::trivial_pass);
    EXPECT_NE(v.reason.find("kappa_in"), std::string::npos);
}

TEST(Engine, WaitingWhereInputsAreExpectedPassesTrivially)
{
    noisy_mirror sut{noisy_mirror_config{}};
    scripted_strategy chooser{script({"1.1", "wait", "wait", "2.1"})};
    const verdict v = dt_run(noisy(), sut, chooser, 8);
    EXPECT_EQ(v.result, outcome::trivial_pass);
    EXPECT_NE(v.reason.find("expects an input"), std::string::npos);
}

TEST(Engine, GoodScriptPasses)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        noisy_mirror_config config;
        config.seed = seed;
        noisy_mirror sut{config};
        scripted_strategy chooser{load_script(fixtures / "numbers" / "good-test1.script")};
        EXPECT_EQ(dt_run(noisy(), sut, chooser, 20).result, outcome::pass);
    }
}

TEST(Engine, EmptyScriptAwaitsUntilBound)
{
    // The standard starts with an input, so waiting passes trivially.
    noisy_mirror sut{noisy_mirror_config{}};
    scripted_strategy chooser{{}};
    const verdict v = dt_run(noisy(), sut, chooser, 1);
    EXPECT_EQ(v.result, outcome::trivial_pass);
    ASSERT_EQ(v.history.size(), 1U);
    EXPECT_TRUE(v.history[0].is_quiescence());
}

TEST(Engine, BoundForcesStop)
{
    silent_sut sut;
    random_strategy chooser{case_weights{0, 1, 0}, 4};
    const verdict v = dt_run(noisy(), sut, chooser, 7);
    EXPECT_EQ(v.history.size(), 7U);
    EXPECT_TRUE(std::all_of(v.history.begin(), v.history.end(), [](const symbol& s) { return s.is_input(); }));
    EXPECT_NE(v.result, outcome::fail);
}

TEST(Engine, PendingOutputIsReceivedBeforeNextInput)
{
    noisy_mirror sut{noisy_mirror_config{}};
    scripted_strategy chooser{script({"1.1", "2.1"})};
    const verdict v = dt_run(noisy(), sut, chooser, 4);
    ASSERT_EQ(v.history.size(), 4U);
    EXPECT_TRUE(v.history[0].is_input());
    EXPECT_TRUE(v.history[1].is_output());
    EXPECT_TRUE(v.history[2].is_input());
}

TEST(Engine, SeededRandomRunsRepeat)
{
    auto run = [] {
        noisy_mirror_config config;
        config.seed = 9;
        noisy_mirror sut{config};
        random_strategy chooser{case_weights{}, 9};
        return dt_run(noisy(), sut, chooser, 20).history;
    };
    EXPECT_EQ(run(), run());
}

TEST(Engine, RandomInputsStayNearStandards)
{
    const contract c = noisy();
    const acceptance_oracle oracle{c, 2};
    random_strategy chooser{case_weights{}, 3};
    chooser.start(oracle);
    for (int n = 0; n < 1000; ++n) {
        const decimal v = chooser.choose_input({});
        const bool near = v >= "0.8"_d && v <= "1.2"_d;
        EXPECT_TRUE(near) << v.to_string();
    }
}

TEST(Engine, LogsStepsAndJsonVerdict)
{
    const contract c = support::single_exchange("0.2"_d, "0.5"_d);
    const trace t = trace_of({"i:1", "o:1"});
    replay_sut sut{t};
    replay_strategy chooser{t};
    std::ostringstream log;
    run_options options;
    options.log = &log;
    options.seed = 5;
    (void)dt_run(c, sut, chooser, 3, options);
    std::istringstream lines{log.str()};
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line))
        all.push_back(line);
    ASSERT_EQ(all.size(), 4U);
    EXPECT_EQ(all[0], "STEP 1 SEND i:1");
    EXPECT_EQ(all[1], "STEP 2 RECV o:1");
    EXPECT_EQ(all[2], "VERDICT PASS stopped");
    const auto json = nlohmann::json::parse(all[3]);
    EXPECT_EQ(json["verdict"], "PASS");
    EXPECT_EQ(json["steps"], 2);
    EXPECT_EQ(json["seed"], 5);
    EXPECT_TRUE(json["witness"].is_null());
}

TEST(Scripts, ParsesValuesWaitsAndComments)
{
    std::istringstream in{"# header\n1.5\nwait\n\n2\n"};
    const auto s = parse_script(in);
    ASSERT_EQ(s.size(), 3U);
    EXPECT_EQ(s[0], "1.5"_d);
    EXPECT_FALSE(s[1]);
    EXPECT_EQ(s[2], "2"_d);
}
