#pragma once

#include "dopetest/symbol.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace dopetest {

using state_id = std::size_t;

/// Default cap on enumerated prefixes for bounded trace enumeration.
inline constexpr std::size_t default_node_budget = 1'000'000;

/// `DOPETEST_NODE_BUDGET` when set to a positive integer, else the default.
std::size_t node_budget_from_env();

struct transition {
    symbol label;
    state_id target;
};

/// Explicit finite labelled transition system. States are named by opaque
/// strings and addressed by dense indices. Alphabets grow with the
/// transitions added; quiescence is never part of them.
class lts {
public:
    lts() = default;

    /// Index of the named state, creating it when missing.
    state_id add_state(const std::string& name);
    [[nodiscard]] std::optional<state_id> find_state(const std::string& name) const;
    [[nodiscard]] const std::string& name(state_id s) const { return names_.at(s); }
    [[nodiscard]] std::size_t state_count() const { return names_.size(); }

    void add_transition(state_id from, const symbol& label, state_id to);
    void add_transition(const std::string& from, const symbol& label, const std::string& to);
    void add_input(decimal v) { inputs_.insert(v); }
    void add_output(decimal v) { outputs_.insert(v); }

    void set_initial(state_id s);
    [[nodiscard]] state_id initial() const;
    [[nodiscard]] bool has_initial() const { return initial_.has_value(); }

    [[nodiscard]] const std::set<decimal>& inputs() const { return inputs_; }
    [[nodiscard]] const std::set<decimal>& outputs() const { return outputs_; }
    [[nodiscard]] const std::vector<transition>& transitions_from(state_id s) const { return out_.at(s); }
    [[nodiscard]] std::size_t transition_count() const;

    [[nodiscard]] bool has_output_or_quiescence(state_id s) const;
    [[nodiscard]] bool has_quiescence(state_id s) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, state_id> index_;
    std::vector<std::vector<transition>> out_;
    std::set<decimal> inputs_;
    std::set<decimal> outputs_;
    std::optional<state_id> initial_;
};

/// An LTS used as standard behaviour, together with whether quiescence has
/// been made explicit.
class standard_lts {
public:
    standard_lts() = default;
    standard_lts(lts system, bool closed) : lts_{std::move(system)}, closed_{closed} {}

    [[nodiscard]] const lts& system() const { return lts_; }
    [[nodiscard]] bool closed() const { return closed_; }

private:
    lts lts_;
    bool closed_ = false;
};

/// Adds a quiescence self-loop to every state that has neither an output
/// nor a quiescence transition. Applying it twice changes nothing.
standard_lts quiescence_closure(const lts& system);

/// Adds a quiescence self-loop only to states without any outgoing
/// transition. Used for standards compiled from recorded runs, where a
/// recording that continues with an input does not license waiting.
standard_lts terminal_closure(const lts& system);

/// All traces of length exactly `length` from the initial state. Throws
/// `resource_error` when more than `node_budget` prefixes are visited.
std::set<trace> enumerate_traces(const lts& system, std::size_t length,
                                 std::size_t node_budget = default_node_budget);

/// All traces of length 1..`depth`.
std::set<trace> enumerate_traces_upto(const lts& system, std::size_t depth,
                                      std::size_t node_budget = default_node_budget);

/// Traces of exactly length `b` of a closed standard. Throws
/// `domain_error` when the standard is not closed.
std::set<trace> traces_exact(const standard_lts& standard, std::size_t b,
                             std::size_t node_budget = default_node_budget);

std::set<state_id> after(const lts& system, const trace& t);
std::set<state_id> after(const standard_lts& standard, const trace& t);

/// Output and quiescence labels enabled in any of `states`.
std::set<symbol> out_set(const lts& system, const std::set<state_id>& states);
std::set<symbol> out_set(const standard_lts& standard, const std::set<state_id>& states);

struct standard_for_result {
    bool holds = true;
    std::size_t depth = 0;
    /// A trace of the implementation that shares its input projection with
    /// a candidate trace but is not a trace of the candidate.
    std::optional<trace> counterexample;
};

/// Bounded check that every trace of `impl` whose input projection occurs
/// in `candidate` is also a trace of `candidate`, for traces up to `depth`.
standard_for_result is_standard_for(const lts& candidate, const lts& impl, std::size_t depth,
                                    std::size_t node_budget = default_node_budget);

} // namespace dopetest
