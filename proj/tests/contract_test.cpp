#include "builders.hpp"

#include "dopetest/contract_io.hpp"
#include "dopetest/errors.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace dopetest;

namespace {

const std::filesystem::path fixtures{DOPETEST_FIXTURE_DIR};

contract parse(const std::string& text)
{
    std::istringstream in{text};
    return parse_contract(in, fixtures / "examples");
}

const char* base = "[thresholds]\nkappa_in = 1\nkappa_out = 1\n"
                   "[input_domain]\nlower = 0\nupper = 5\nstep = 0.5\n"
                   "[output_domain]\nlower = 0\nupper = 5\nstep = 0.5\n";

} // namespace

TEST(ContractIo, LoadsLtsStandard)
{
    const contract c = load_contract(fixtures / "examples" / "branching.ini");
    EXPECT_EQ(c.kappa_in(), "1"_d);
    EXPECT_EQ(c.input_domain().size(), 11);
    EXPECT_TRUE(c.standard().closed());
    EXPECT_EQ(c.d_in(), distance_kind::last_abs);
}

TEST(ContractIo, LoadsRecordedStandard)
{
    const contract c = load_contract(fixtures / "numbers" / "noisy.ini");
    EXPECT_EQ(c.kappa_out(), "0.5"_d);
    EXPECT_EQ(c.standard().system().initial(), *c.standard().system().find_state("r"));
}

TEST(ContractIo, RejectsMissingKeysAndBadSections)
{
    EXPECT_THROW(parse("[thresholds]\nkappa_in = 1\n"), parse_error);
    EXPECT_THROW(parse(std::string{base} + "[standard]\nlts = branching.lts\ntrace = x\n"), parse_error);
    EXPECT_THROW(parse(std::string{base} + "[standard]\nlts = branching.lts\nclosure = other\n"), parse_error);
    EXPECT_THROW(parse("kappa_in = 1\n"), parse_error);
}

TEST(Contract, RejectsStandardOutsideDomains)
{
    EXPECT_THROW(parse(std::string{"[thresholds]\nkappa_in = 1\nkappa_out = 1\n"
                                   "[input_domain]\nlower = 0\nupper = 2\nstep = 1\n"
                                   "[output_domain]\nlower = 0\nupper = 1\nstep = 1\n"
                                   "[standard]\nlts = branching.lts\n"}),
                 domain_error);
}

TEST(Contract, RejectsNegativeThresholds)
{
    const value_domain grid{"0"_d, "5"_d, "1"_d};
    EXPECT_THROW((contract{grid, grid, thresholds{"-1"_d, "1"_d}, quiescence_closure(support::lts_from_text("s0\ti:1\ts1\n"))}),
                 domain_error);
}

TEST(Contract, SnapsToGrid)
{
    const contract c = support::example_branching();
    EXPECT_EQ(c.snap(symbol::input("2.2"_d)), symbol::input("2"_d));
    EXPECT_EQ(c.snap(symbol::quiescence()), symbol::quiescence());
    EXPECT_TRUE(c.in_domain(symbol::output("4.5"_d)));
    EXPECT_FALSE(c.in_domain(symbol::output("4.2"_d)));
}
