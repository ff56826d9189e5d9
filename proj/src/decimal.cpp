#include "dopetest/decimal.hpp"

#include "dopetest/errors.hpp"

#include <cmath>
#include <limits>

namespace dopetest {

namespace {

constexpr std::int64_t max_whole = std::numeric_limits<std::int64_t>::max() / decimal::scale - 1;

} // namespace

decimal decimal::from_double(double value)
{
    if (!std::isfinite(value) || std::fabs(value) >= static_cast<double>(max_whole))
        throw domain_error("value out of decimal range: " + std::to_string(value));
    return decimal{static_cast<std::int64_t>(std::llround(value * scale))};
}

decimal decimal::parse(std::string_view text)
{
    const std::string original{text};
    if (text.empty())
        throw parse_error("empty decimal");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    std::int64_t whole = 0;
    std::int64_t fraction = 0;
    int fraction_seen = 0;
    bool round_up = false;
    bool any_digit = false;
    bool in_fraction = false;

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (in_fraction)
                throw parse_error("malformed decimal '" + original + "'");
            in_fraction = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw parse_error("malformed decimal '" + original + "'");
        any_digit = true;
        const int digit = c - '0';
        if (!in_fraction) {
            if (whole > max_whole / 10)
                throw parse_error("decimal out of range '" + original + "'");
            whole = whole * 10 + digit;
        } else if (fraction_seen < fraction_digits) {
            fraction = fraction * 10 + digit;
            ++fraction_seen;
        } else if (fraction_seen == fraction_digits) {
            round_up = digit >= 5;
            ++fraction_seen;
        }
    }
    if (!any_digit)
        throw parse_error("malformed decimal '" + original + "'");

    for (int i = std::min(fraction_seen, fraction_digits); i < fraction_digits; ++i)
        fraction *= 10;

    std::int64_t units = whole * scale + fraction + (round_up ? 1 : 0);
    return decimal{negative ? -units : units};
}

std::string decimal::to_string() const
{
    const bool negative = units_ < 0;
    const std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-(units_ + 1)) + 1
                                             : static_cast<std::uint64_t>(units_);
    std::string out = negative ? "-" : "";
    out += std::to_string(magnitude / scale);
    std::uint64_t fraction = magnitude % scale;
    if (fraction != 0) {
        std::string digits = std::to_string(fraction);
        digits.insert(0, static_cast<std::size_t>(fraction_digits) - digits.size(), '0');
        while (digits.back() == '0')
            digits.pop_back();
        out += '.';
        out += digits;
    }
    return out;
}

int decimal::decimal_places() const
{
    std::int64_t fraction = units_ % scale;
    if (fraction == 0)
        return 0;
    int places = fraction_digits;
    while (fraction % 10 == 0) {
        fraction /= 10;
        --places;
    }
    return places;
}

inline namespace literals {
decimal operator""_d(const char* text, std::size_t length)
{
    return decimal::parse(std::string_view{text, length});
}
} // namespace literals

} // namespace dopetest
