#pragma once

#include "dopetest/contract.hpp"
#include "dopetest/engine.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dopetest {

enum class trace_format { canonical, speed_nox };

trace_format parse_trace_format(const std::string& name);

inline constexpr std::size_t default_speed_inputs = 1180;

struct recorded_trace {
    trace symbols;
    std::filesystem::path source;
    trace_format format = trace_format::canonical;
};

/// Canonical: one record per line, `i <v>`, `o <v>` or `q`; `#` comments.
/// Speed-nox: one decimal per line, `inputs` inputs followed by one output.
/// Throws `parse_error` with the offending line number.
trace parse_trace(std::istream& in, trace_format format, std::size_t inputs = default_speed_inputs);
recorded_trace load_trace(const std::filesystem::path& path, trace_format format,
                          std::size_t inputs = default_speed_inputs);

/// Tree-shaped standard whose maximal traces are the recordings, each
/// ending in a quiescence loop. Shared prefixes share states.
standard_lts monitored_standard(const std::vector<trace>& recordings);
standard_lts monitored_standard(const std::vector<recorded_trace>& recordings);

/// Replays the recording through the bounded test with bound
/// |recording| + 1. Values are snapped onto the contract grids first.
verdict monitor_verdict(const contract& c, const trace& recording, const run_options& options = {});
verdict monitor_verdict(const contract& c, const recorded_trace& recording, const run_options& options = {});

} // namespace dopetest
