#pragma once

#include "dopetest/contract.hpp"

#include <filesystem>
#include <iosfwd>

namespace dopetest {

/// Reads an INI-style contract:
///
///     [thresholds]
///     kappa_in = 0.2
///     kappa_out = 0.5
///     [input_domain]
///     lower = 0
///     upper = 50
///     step = 0.001
///     [output_domain]
///     ...
///     [distance]
///     in = last_abs
///     out = last_abs
///     [standard]
///     trace = run-std1.trace      (repeatable; format = canonical | speed-nox, inputs = N)
///     lts = standard.lts          (alternative; closure = quiescence | terminal)
///
/// Relative paths in `[standard]` are resolved against `base_dir`.
contract parse_contract(std::istream& in, const std::filesystem::path& base_dir);
contract load_contract(const std::filesystem::path& path);

} // namespace dopetest
