#pragma once

#include "dopetest/decimal.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dopetest {

/// Closed interval [lo, hi] of decimals.
struct interval {
    decimal lo;
    decimal hi;

    constexpr bool operator==(const interval&) const = default;
};

/// Sorted, disjoint closed intervals.
using interval_set = std::vector<interval>;

/// Sorts and merges overlapping or touching intervals.
interval_set normalize(interval_set set);
interval_set intersect(const interval_set& a, const interval_set& b);

/// The finite grid {lower, lower + step, ...} within [lower, upper].
class value_domain {
public:
    value_domain() = default;
    /// Throws `domain_error` unless lower <= upper and step > 0.
    value_domain(decimal lower, decimal upper, decimal step);

    [[nodiscard]] decimal lower() const { return lower_; }
    [[nodiscard]] decimal upper() const { return upper_; }
    [[nodiscard]] decimal step() const { return step_; }

    [[nodiscard]] std::int64_t size() const { return count_; }
    [[nodiscard]] decimal at(std::int64_t index) const;
    [[nodiscard]] bool contains(decimal v) const;

    /// Nearest grid point when `v` is at most step/2 away from one; throws
    /// `domain_error` otherwise. Ties round up.
    [[nodiscard]] decimal snap(decimal v) const;

    [[nodiscard]] std::optional<decimal> first_at_or_above(decimal v) const;
    [[nodiscard]] std::optional<decimal> last_at_or_below(decimal v) const;

    /// Grid points inside the given intervals, in ascending order.
    [[nodiscard]] std::int64_t count_in(const interval_set& set) const;
    [[nodiscard]] decimal nth_in(const interval_set& set, std::int64_t n) const;
    [[nodiscard]] std::vector<decimal> points_in(const interval_set& set) const;
    [[nodiscard]] std::vector<decimal> points() const;

    [[nodiscard]] interval whole() const { return {lower_, upper_}; }

    bool operator==(const value_domain&) const = default;

private:
    /// Index range [first, last] of grid points inside [lo, hi]; empty when first > last.
    [[nodiscard]] std::pair<std::int64_t, std::int64_t> index_range(interval iv) const;

    decimal lower_;
    decimal upper_;
    decimal step_ = decimal::from_integer(1);
    std::int64_t count_ = 1;
};

} // namespace dopetest
