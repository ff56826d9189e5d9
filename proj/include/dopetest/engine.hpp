#pragma once

#include "dopetest/acceptance.hpp"
#include "dopetest/sut.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace dopetest {

enum class test_case { stop, send_input, await_output };

/// Chooses what the test does next. The engine stops at the bound whatever
/// the strategy says.
class strategy {
public:
    virtual ~strategy() = default;

    /// Called once before the first step.
    virtual void start(const acceptance_oracle& oracle) { (void)oracle; }
    virtual test_case choose_case(const trace& h) = 0;
    virtual decimal choose_input(const trace& h) = 0;
};

enum class outcome { pass, fail, trivial_pass };

std::string to_string(outcome o);

struct verdict {
    outcome result = outcome::pass;
    trace history;
    /// Fail: the standard trace whose outputs cannot be matched.
    std::optional<trace> witness;
    /// Fail: why the last output was rejected. TrivialPass: the warning.
    /// Pass: how the run ended.
    std::string reason;
    std::size_t bound = 0;
};

struct run_options {
    std::chrono::milliseconds timeout = default_quiescence_timeout;
    /// Receives `STEP`/`VERDICT` lines and the JSON summary when set.
    std::ostream* log = nullptr;
    std::uint64_t seed = 0;
};

/// Runs the bounded doping test. The SUT is reset first. SUT failures and
/// outputs outside the output domain propagate as exceptions.
verdict dt_run(const acceptance_oracle& oracle, sut_connection& sut, strategy& chooser, const run_options& options = {});
verdict dt_run(const contract& c, sut_connection& sut, strategy& chooser, std::size_t bound,
               const run_options& options = {});

/// One-line JSON rendering with a fixed field order:
/// verdict, steps, bound, seed, reason, history, witness.
std::string verdict_json(const verdict& v, std::uint64_t seed);

} // namespace dopetest
