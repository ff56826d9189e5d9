#pragma once

#include "dopetest/lts.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dopetest {

/// Connection to a system under test. Owned by one engine at a time.
class sut_connection {
public:
    virtual ~sut_connection() = default;

    virtual void send(decimal input) = 0;
    /// An output that is already available, without waiting. Consumes it.
    virtual std::optional<decimal> poll() = 0;
    /// The next output, or quiescence when none arrives before `timeout`.
    virtual symbol receive(std::chrono::milliseconds timeout) = 0;
    /// Back to the initial state.
    virtual void reset() = 0;
};

struct noisy_mirror_config {
    int decimals_threshold = 2;
    decimal doped_max_factor = decimal::from_integer(4);
    std::uint64_t seed = 0;
    /// Grid the outputs are rounded onto.
    decimal output_step = decimal::from_units(1000);
};

/// Returns the input or twice the input, chosen by a seeded coin. Inputs
/// whose shortest rendering has more than `decimals_threshold` fractional
/// digits are instead multiplied by a factor drawn uniformly from
/// [1, doped_max_factor].
class noisy_mirror final : public sut_connection {
public:
    explicit noisy_mirror(noisy_mirror_config config);

    void send(decimal input) override;
    std::optional<decimal> poll() override;
    symbol receive(std::chrono::milliseconds timeout) override;
    void reset() override;

private:
    noisy_mirror_config config_;
    std::mt19937_64 rng_;
    std::vector<decimal> pending_;
};

/// Walks an explicit LTS. On entering a state it picks uniformly among the
/// outgoing outputs and quiescence transitions; a picked output becomes
/// available to `poll` and `receive`. States without any of these are
/// quiescent.
class lts_player final : public sut_connection {
public:
    lts_player(lts system, std::uint64_t seed);
    lts_player(const standard_lts& standard, std::uint64_t seed) : lts_player(standard.system(), seed) {}

    /// Throws `sut_error` with `input_rejected` when the input is not
    /// enabled in the current state.
    void send(decimal input) override;
    std::optional<decimal> poll() override;
    symbol receive(std::chrono::milliseconds timeout) override;
    void reset() override;

    [[nodiscard]] state_id current() const { return state_; }

private:
    void arrive(state_id s);

    lts system_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    state_id state_ = 0;
    std::optional<transition> choice_;
};

/// Plays back the outputs of a recorded trace. Inputs must arrive exactly
/// in recorded order.
class replay_sut final : public sut_connection {
public:
    explicit replay_sut(trace recording) : recording_{std::move(recording)} {}

    /// Throws `sut_error` with `input_rejected` when the input differs from
    /// the recording.
    void send(decimal input) override;
    std::optional<decimal> poll() override;
    symbol receive(std::chrono::milliseconds timeout) override;
    void reset() override { position_ = 0; }

private:
    trace recording_;
    std::size_t position_ = 0;
};

/// Spawns `argv` and talks to it over the line protocol `IN <decimal>` /
/// `OUT <decimal>`. Every reset starts a fresh child.
std::unique_ptr<sut_connection> external_process(std::vector<std::string> argv);

/// Default quiescence timeout for external processes.
inline constexpr std::chrono::milliseconds default_quiescence_timeout{500};

} // namespace dopetest
