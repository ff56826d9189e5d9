#pragma once

#include "dopetest/cleanness.hpp"
#include "dopetest/contract.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dopetest {

struct satisfiability_result {
    bool satisfiable = true;
    std::size_t depth = 0;
    /// Shortest history after which no output and no quiescence is
    /// acceptable, with the standard traces that force this. When the
    /// conflict has a disjoint pair of output tubes, exactly that pair is
    /// reported.
    std::optional<trace> witness;
    std::vector<trace> conflicting;
    /// Set when the standard itself is not robustly clean.
    std::optional<cleanness_result> standard_cleanness;
    std::string explanation;
};

/// Searches histories of the reference implementation up to `depth` for one
/// with an empty acceptance set, then checks that the standard is robustly
/// clean up to `depth`.
satisfiability_result check_satisfiable_bounded(const contract& c, std::size_t depth,
                                                std::size_t node_budget = default_node_budget);

} // namespace dopetest
