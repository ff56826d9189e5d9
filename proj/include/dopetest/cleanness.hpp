#pragma once

#include "dopetest/contract.hpp"

#include <optional>

namespace dopetest {

struct cleanness_counterexample {
    /// 1: the implementation cannot match a standard output under the
    /// deviating inputs. 2: an output under deviating inputs is too far
    /// from every implementation output under the standard inputs.
    int condition = 0;
    trace sigma;        ///< standard trace
    trace sigma_prime;  ///< deviating trace
    std::size_t k = 0;  ///< position of the unmatched output
};

struct cleanness_result {
    bool clean = true;
    std::size_t depth = 0;
    std::optional<cleanness_counterexample> counterexample;
};

/// Exhaustive check of both robust cleanness conditions over the traces of
/// `impl` of length exactly `depth`. Standard traces are the traces of the
/// contract standard that `impl` also has. Condition 2 is examined before
/// condition 1 for each pair and position.
cleanness_result robustly_clean_bounded(const standard_lts& impl, const contract& c, std::size_t depth,
                                        std::size_t node_budget = default_node_budget);

} // namespace dopetest
