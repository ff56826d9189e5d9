#pragma once

#include "dopetest/acceptance.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace dopetest {

/// The reference implementation up to a depth, with histories as states.
/// Every grid input and every acceptable output is enabled below the
/// depth; histories of length `depth` have nothing enabled.
class bounded_reference {
public:
    [[nodiscard]] std::size_t depth() const { return depth_; }
    [[nodiscard]] std::size_t state_count() const { return enabled_.size(); }
    [[nodiscard]] bool contains(const trace& h) const { return enabled_.contains(h); }
    /// Enabled labels in ascending order; throws `std::out_of_range` for unknown histories.
    [[nodiscard]] const std::vector<symbol>& enabled(const trace& h) const { return enabled_.at(h); }
    [[nodiscard]] std::set<symbol> enabled_outputs(const trace& h) const;
    [[nodiscard]] const std::map<trace, std::vector<symbol>>& states() const { return enabled_; }

    /// Explicit LTS whose state names are the rendered histories.
    [[nodiscard]] lts to_lts() const;

    /// One line per state: `<history> | enabled: <labels>`.
    void dump(std::ostream& out) const;

private:
    friend bounded_reference build_reference_bounded(const contract&, std::size_t, std::size_t);

    std::size_t depth_ = 0;
    std::map<trace, std::vector<symbol>> enabled_;
};

/// Materializes the reference implementation up to `depth`, using the
/// oracle with bound `depth`. Throws `resource_error` beyond `node_budget`
/// states.
bounded_reference build_reference_bounded(const contract& c, std::size_t depth,
                                          std::size_t node_budget = default_node_budget);

/// Name used for a history in `to_lts` and `dump`.
std::string history_name(const trace& h);

struct ioco_result {
    bool conforms = true;
    std::size_t depth = 0;
    /// First suspension trace after which the implementation shows an
    /// output the reference does not allow.
    std::optional<trace> history;
    std::optional<symbol> output;
};

/// Checks out(impl after s) within the reference outputs after s for every
/// trace s of the reference shorter than `depth`.
ioco_result ioco_check_bounded(const standard_lts& impl, const bounded_reference& reference, std::size_t depth,
                               std::size_t node_budget = default_node_budget);

} // namespace dopetest
