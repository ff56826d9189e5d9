#pragma once

#include "dopetest/contract.hpp"

#include <set>
#include <vector>

namespace dopetest::support {

/// Every trace of length exactly `b`, by walking all paths of the LTS.
std::set<trace> path_traces(const lts& system, std::size_t b);

/// Acceptable outputs after `h`, computed straight from the definition over
/// `path_traces`, with its own distance functions.
std::set<symbol> brute_force_acc(const contract& c, const trace& h, std::size_t b);

/// All outputs of the contract plus quiescence.
std::vector<symbol> output_alphabet(const contract& c);

} // namespace dopetest::support
