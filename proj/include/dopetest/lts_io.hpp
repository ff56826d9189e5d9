#pragma once

#include "dopetest/lts.hpp"

#include <filesystem>
#include <iosfwd>

namespace dopetest {

/// Reads the tab separated LTS text format:
///
///     # comment
///     initial s0
///     input 1 2 3
///     output 5
///     s0<TAB>i:1<TAB>s1
///
/// Header lines may appear anywhere. The first state mentioned becomes the
/// initial state when no `initial` line is given.
lts parse_lts(std::istream& in);
lts load_lts(const std::filesystem::path& path);

void write_lts(std::ostream& out, const lts& system);

} // namespace dopetest
