#pragma once

#include "dopetest/decimal.hpp"
#include "dopetest/symbol.hpp"

#include <compare>
#include <string>

namespace dopetest {

/// A nonnegative decimal or +infinity. Infinity is ordered above every
/// finite value and absorbs addition.
class distance {
public:
    constexpr distance() = default;
    constexpr distance(decimal value) : value_{value} {} // NOLINT(google-explicit-constructor)

    static constexpr distance infinity()
    {
        distance d;
        d.infinite_ = true;
        return d;
    }

    [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }
    /// The finite value; zero for infinity.
    [[nodiscard]] constexpr decimal value() const { return infinite_ ? decimal{} : value_; }

    constexpr bool operator==(const distance& other) const
    {
        return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
    }

    constexpr std::strong_ordering operator<=>(const distance& other) const
    {
        if (infinite_ || other.infinite_)
            return infinite_ <=> other.infinite_;
        return value_ <=> other.value_;
    }

    friend constexpr distance operator+(distance a, distance b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return distance{a.value_ + b.value_};
    }

    [[nodiscard]] std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

private:
    decimal value_;
    bool infinite_ = false;
};

enum class distance_kind { last_abs };

distance_kind parse_distance_kind(const std::string& name);
std::string to_string(distance_kind kind);

/// Input distance on the last symbols of two input projections: the
/// absolute difference of two inputs, 0 for two masks, infinity for a
/// mixed pair. Throws `domain_error` for output-side symbols.
distance d_in_last(const projected_symbol& a, const projected_symbol& b);

/// Quiescence-aware output distance on last symbols: the absolute
/// difference of two outputs, 0 for two quiescences or two masks, infinity
/// when exactly one side is quiescent or exactly one side is masked.
/// Throws `domain_error` for input-side symbols.
distance d_out_delta(const projected_symbol& a, const projected_symbol& b);
distance d_out_delta(const symbol& a, const symbol& b);

/// True when, at every position j of `h_plus`, the input distance between
/// the input projection of `h_plus` and `sigma_i` is at most `kappa_in`.
bool prefix_inputs_within(const trace& h_plus, const projected_trace& sigma_i, decimal kappa_in);

} // namespace dopetest
