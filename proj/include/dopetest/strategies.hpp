#pragma once

#include "dopetest/engine.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <random>
#include <vector>

namespace dopetest {

/// Probabilities of stop, send input and await output; need not sum to 1.
struct case_weights {
    double stop = 0.05;
    double send = 0.65;
    double await = 0.30;
};

/// Draws the case from `weights`. Inputs are drawn uniformly from the grid
/// points within kappa_in of some standard trace still within reach, or
/// from the whole input grid when there are none.
class random_strategy final : public strategy {
public:
    /// Throws `domain_error` for negative weights or a zero sum.
    random_strategy(case_weights weights, std::uint64_t seed);

    void start(const acceptance_oracle& oracle) override;
    test_case choose_case(const trace& h) override;
    decimal choose_input(const trace& h) override;

private:
    case_weights weights_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    const acceptance_oracle* oracle_ = nullptr;
};

/// One scripted step: an input to send, or a wait for an output.
using script_entry = std::optional<decimal>;

/// Sends the scripted inputs in order and waits where the script says so.
/// Once the script is exhausted it waits for outputs until the bound.
class scripted_strategy final : public strategy {
public:
    explicit scripted_strategy(std::vector<script_entry> script) : script_{std::move(script)} {}

    void start(const acceptance_oracle& oracle) override;
    test_case choose_case(const trace& h) override;
    decimal choose_input(const trace& h) override;

private:
    std::vector<script_entry> script_;
    std::size_t next_ = 0;
};

/// Replays a recording: sends recorded inputs, waits where an output or
/// quiescence was recorded, and stops at the end of the recording.
class replay_strategy final : public strategy {
public:
    explicit replay_strategy(trace recording) : recording_{std::move(recording)} {}

    test_case choose_case(const trace& h) override;
    decimal choose_input(const trace& h) override;

private:
    trace recording_;
};

/// Script file: one entry per line, a decimal or `wait`; `#` comments.
std::vector<script_entry> parse_script(std::istream& in);
std::vector<script_entry> load_script(const std::filesystem::path& path);

} // namespace dopetest
