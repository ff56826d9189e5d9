#pragma once

#include "dopetest/decimal.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dopetest {

enum class symbol_kind : std::uint8_t { input, output, quiescence };

/// One step of an execution: an input value, an output value, or
/// quiescence (delta). Quiescence always carries a zero value so that the
/// defaulted comparison is a total order.
struct symbol {
    symbol_kind kind = symbol_kind::quiescence;
    decimal value;

    static constexpr symbol input(decimal v) { return {symbol_kind::input, v}; }
    static constexpr symbol output(decimal v) { return {symbol_kind::output, v}; }
    static constexpr symbol quiescence() { return {symbol_kind::quiescence, decimal{}}; }

    [[nodiscard]] constexpr bool is_input() const { return kind == symbol_kind::input; }
    [[nodiscard]] constexpr bool is_output() const { return kind == symbol_kind::output; }
    [[nodiscard]] constexpr bool is_quiescence() const { return kind == symbol_kind::quiescence; }
    /// Output or quiescence.
    [[nodiscard]] constexpr bool is_output_side() const { return kind != symbol_kind::input; }

    constexpr auto operator<=>(const symbol&) const = default;
};

enum class projected_kind : std::uint8_t { input, masked_input, output, masked_output, quiescence };

/// A symbol seen through an input or output projection. Masked entries
/// stand for "something from the other side happened here".
struct projected_symbol {
    projected_kind kind = projected_kind::masked_input;
    decimal value;

    static constexpr projected_symbol input(decimal v) { return {projected_kind::input, v}; }
    static constexpr projected_symbol masked_input() { return {projected_kind::masked_input, decimal{}}; }
    static constexpr projected_symbol output(decimal v) { return {projected_kind::output, v}; }
    static constexpr projected_symbol masked_output() { return {projected_kind::masked_output, decimal{}}; }
    static constexpr projected_symbol quiescence() { return {projected_kind::quiescence, decimal{}}; }

    [[nodiscard]] constexpr bool is_input_side() const
    {
        return kind == projected_kind::input || kind == projected_kind::masked_input;
    }

    constexpr auto operator<=>(const projected_symbol&) const = default;
};

using trace = std::vector<symbol>;
using projected_trace = std::vector<projected_symbol>;

/// First `k` symbols (the whole trace when k exceeds its length).
trace prefix(const trace& t, std::size_t k);

projected_symbol project_input(const symbol& s);
projected_symbol project_output(const symbol& s);
projected_symbol project_output(const projected_symbol& s);

projected_trace project_inputs(const trace& t);
projected_trace project_outputs(const trace& t);

/// Label syntax used by LTS files and logs: `i:<v>`, `o:<v>`, `q`.
std::string to_label(const symbol& s);
symbol parse_label(std::string_view text);

/// Record syntax used by trace files: `i <v>`, `o <v>`, `q`.
std::string to_record(const symbol& s);

std::string to_string(const projected_symbol& s);

/// Space separated labels, `<empty>` for the empty trace.
std::string to_string(const trace& t);
/// Comma separated records, `<empty>` for the empty trace.
std::string to_record_list(const trace& t);

} // namespace dopetest
