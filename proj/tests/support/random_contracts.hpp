#pragma once

#include "dopetest/contract.hpp"

#include <cstdint>
#include <random>

namespace dopetest::support {

struct random_contract_limits {
    std::size_t max_inputs = 5;
    std::size_t max_outputs = 5;
    std::size_t max_traces = 3;
    std::size_t max_trace_length = 4;
};

/// A small contract with grid domains, a standard built from up to
/// `max_traces` random traces (sometimes sharing a prefix, sometimes as a
/// separate nondeterministic branch) and thresholds drawn from {0, 0.5, 1, 2}.
contract random_contract(std::mt19937_64& rng, const random_contract_limits& limits = {});

} // namespace dopetest::support
