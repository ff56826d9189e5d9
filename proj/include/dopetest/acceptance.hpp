#pragma once

#include "dopetest/contract.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

namespace dopetest {

/// Outputs (and possibly quiescence) acceptable after a history.
struct acceptance_set {
    std::set<symbol> outputs;
    /// No standard input projection is within kappa_in of the history
    /// extended by an output; `outputs` then holds every output and
    /// quiescence.
    bool vacuous = false;
};

/// Acceptable outputs after a history as grid-free intervals plus a
/// quiescence flag.
struct output_region {
    interval_set intervals;
    bool quiescence = false;
    bool vacuous = false;
};

struct acceptance_check {
    bool accepted = false;
    bool vacuous = false;
    /// For a rejected output: the lexicographically first standard trace
    /// within kappa_in whose outputs cannot be matched.
    std::optional<trace> witness;
};

/// Standard traces of the bound length sharing one input projection.
struct trace_group {
    projected_trace projection;
    /// Output-side symbols of the members at each position.
    std::vector<std::set<symbol>> outputs;
    /// Lexicographically smallest member.
    trace representative;
    std::size_t members = 0;
};

/// Bounded acceptance oracle over the standard traces of length exactly
/// `bound`. Safe to share between threads.
class acceptance_oracle {
public:
    acceptance_oracle(const contract& c, std::size_t bound, std::size_t node_budget = default_node_budget);

    [[nodiscard]] const contract& contract_ref() const { return contract_; }
    [[nodiscard]] std::size_t bound() const { return bound_; }
    [[nodiscard]] const std::vector<trace_group>& groups() const { return groups_; }

    /// Indices of groups whose input projection stays within kappa_in of
    /// `h` at every position of `h`.
    [[nodiscard]] std::vector<std::size_t> live_groups(const trace& h) const;

    /// Whether output or quiescence `o` may follow `h`. Throws
    /// `bound_error` when |h| >= bound.
    [[nodiscard]] acceptance_check check(const trace& h, const symbol& o) const;

    [[nodiscard]] output_region region(const trace& h) const;

    /// The full acceptance set over the output grid and quiescence.
    [[nodiscard]] acceptance_set acc(const trace& h) const;

    /// Input values at position |h|+1 that keep some group within kappa_in.
    [[nodiscard]] interval_set admissible_inputs(const trace& h) const;

    /// Live groups that expect an output-side symbol at position |h|+1.
    [[nodiscard]] std::vector<std::size_t> output_groups(const trace& h) const;

private:
    void require_below_bound(const trace& h) const;
    [[nodiscard]] bool input_close(const trace_group& g, std::size_t pos, const symbol& s) const;

    contract contract_;
    std::size_t bound_;
    std::vector<trace_group> groups_;

    struct memo {
        trace history;
        /// live[k] holds the live groups after the first k symbols of history.
        std::vector<std::vector<std::size_t>> live;
    };
    mutable std::mutex memo_mutex_;
    mutable memo memo_;
};

/// Convenience wrapper building a one-off oracle.
acceptance_set acc_b(const contract& c, const trace& h, std::size_t b);

} // namespace dopetest
