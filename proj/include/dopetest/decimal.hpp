#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace dopetest {

/// Exact fixed-point decimal with six fractional digits.
///
/// Every value that flows through contracts, traces and distances is a
/// `decimal`, so threshold comparisons such as |204 - 180| <= 180 are exact
/// integer comparisons. Text with more than six fractional digits is rounded
/// half away from zero when parsed.
class decimal {
public:
    static constexpr std::int64_t scale = 1'000'000;
    static constexpr int fraction_digits = 6;

    constexpr decimal() = default;

    static constexpr decimal from_units(std::int64_t units) { return decimal{units}; }
    static constexpr decimal from_integer(std::int64_t whole) { return decimal{whole * scale}; }
    static decimal from_double(double value);

    /// Parses `[+-]digits[.digits]`. Throws `parse_error` on malformed text.
    static decimal parse(std::string_view text);

    [[nodiscard]] constexpr std::int64_t units() const { return units_; }
    [[nodiscard]] double to_double() const { return static_cast<double>(units_) / scale; }

    /// Shortest text that parses back to the same value ("1.5", "-3", "0.001").
    [[nodiscard]] std::string to_string() const;

    /// Number of significant fractional digits in `to_string()`.
    [[nodiscard]] int decimal_places() const;

    constexpr auto operator<=>(const decimal&) const = default;

    constexpr decimal operator-() const { return decimal{-units_}; }
    constexpr decimal& operator+=(decimal other) { units_ += other.units_; return *this; }
    constexpr decimal& operator-=(decimal other) { units_ -= other.units_; return *this; }
    friend constexpr decimal operator+(decimal a, decimal b) { return a += b; }
    friend constexpr decimal operator-(decimal a, decimal b) { return a -= b; }

private:
    constexpr explicit decimal(std::int64_t units) : units_{units} {}

    std::int64_t units_ = 0;
};

constexpr decimal abs(decimal d) { return d < decimal{} ? -d : d; }

inline namespace literals {
/// `"1.25"_d` for tests and fixtures.
decimal operator""_d(const char* text, std::size_t length);
} // namespace literals

} // namespace dopetest

template <>
struct std::hash<dopetest::decimal> {
    std::size_t operator()(const dopetest::decimal& d) const noexcept
    {
        return std::hash<std::int64_t>{}(d.units());
    }
};
