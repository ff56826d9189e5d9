#include "dopetest/value_domain.hpp"

#include "dopetest/errors.hpp"

#include <algorithm>

namespace dopetest {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

} // namespace

interval_set normalize(interval_set set)
{
    std::erase_if(set, [](const interval& iv) { return iv.hi < iv.lo; });
    std::sort(set.begin(), set.end(), [](const interval& a, const interval& b) { return a.lo < b.lo; });
    interval_set merged;
    for (const auto& iv : set) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    return merged;
}

interval_set intersect(const interval_set& a, const interval_set& b)
{
    interval_set out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const decimal lo = std::max(a[i].lo, b[j].lo);
        const decimal hi = std::min(a[i].hi, b[j].hi);
        if (lo <= hi)
            out.push_back({lo, hi});
        if (a[i].hi < b[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

value_domain::value_domain(decimal lower, decimal upper, decimal step)
    : lower_{lower}, upper_{upper}, step_{step}
{
    if (step <= decimal{})
        throw domain_error("domain step must be positive, got " + step.to_string());
    if (upper < lower)
        throw domain_error("domain lower bound " + lower.to_string() + " exceeds upper bound "
                           + upper.to_string());
    count_ = (upper.units() - lower.units()) / step.units() + 1;
}

decimal value_domain::at(std::int64_t index) const
{
    if (index < 0 || index >= count_)
        throw std::out_of_range("grid index out of range");
    return decimal::from_units(lower_.units() + index * step_.units());
}

bool value_domain::contains(decimal v) const
{
    if (v < lower_ || v > upper_)
        return false;
    return (v.units() - lower_.units()) % step_.units() == 0;
}

decimal value_domain::snap(decimal v) const
{
    const std::int64_t offset = v.units() - lower_.units();
    const std::int64_t index = floor_div(2 * offset + step_.units(), 2 * step_.units());
    if (index < 0 || index >= count_)
        throw domain_error("value " + v.to_string() + " is outside the domain [" + lower_.to_string() + ", "
                           + upper_.to_string() + "]");
    return at(index);
}

std::optional<decimal> value_domain::first_at_or_above(decimal v) const
{
    const std::int64_t index = std::max<std::int64_t>(0, ceil_div(v.units() - lower_.units(), step_.units()));
    if (index >= count_)
        return std::nullopt;
    return at(index);
}

std::optional<decimal> value_domain::last_at_or_below(decimal v) const
{
    const std::int64_t index =
        std::min<std::int64_t>(count_ - 1, floor_div(v.units() - lower_.units(), step_.units()));
    if (index < 0)
        return std::nullopt;
    return at(index);
}

std::pair<std::int64_t, std::int64_t> value_domain::index_range(interval iv) const
{
    const std::int64_t first = std::max<std::int64_t>(0, ceil_div(iv.lo.units() - lower_.units(), step_.units()));
    const std::int64_t last =
        std::min<std::int64_t>(count_ - 1, floor_div(iv.hi.units() - lower_.units(), step_.units()));
    return {first, last};
}

std::int64_t value_domain::count_in(const interval_set& set) const
{
    std::int64_t n = 0;
    for (const auto& iv : set) {
        const auto [first, last] = index_range(iv);
        if (first <= last)
            n += last - first + 1;
    }
    return n;
}

decimal value_domain::nth_in(const interval_set& set, std::int64_t n) const
{
    for (const auto& iv : set) {
        const auto [first, last] = index_range(iv);
        if (first > last)
            continue;
        if (n <= last - first)
            return at(first + n);
        n -= last - first + 1;
    }
    throw std::out_of_range("grid point index out of range");
}

std::vector<decimal> value_domain::points_in(const interval_set& set) const
{
    std::vector<decimal> out;
    for (const auto& iv : set) {
        const auto [first, last] = index_range(iv);
        for (std::int64_t k = first; k <= last; ++k)
            out.push_back(at(k));
    }
    return out;
}

std::vector<decimal> value_domain::points() const
{
    return points_in({whole()});
}

} // namespace dopetest
