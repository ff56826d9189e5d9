#include "dopetest/lts.hpp"

#include "dopetest/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <string_view>

namespace dopetest {

std::size_t node_budget_from_env()
{
    const char* raw = std::getenv("DOPETEST_NODE_BUDGET");
    if (raw == nullptr)
        return default_node_budget;
    std::string_view text{raw};
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
        return default_node_budget;
    return value;
}

state_id lts::add_state(const std::string& name)
{
    if (auto it = index_.find(name); it != index_.end())
        return it->second;
    const state_id id = names_.size();
    names_.push_back(name);
    out_.emplace_back();
    index_.emplace(name, id);
    return id;
}

std::optional<state_id> lts::find_state(const std::string& name) const
{
    if (auto it = index_.find(name); it != index_.end())
        return it->second;
    return std::nullopt;
}

void lts::add_transition(state_id from, const symbol& label, state_id to)
{
    if (from >= names_.size() || to >= names_.size())
        throw std::out_of_range("transition refers to an unknown state");
    if (label.is_input())
        inputs_.insert(label.value);
    else if (label.is_output())
        outputs_.insert(label.value);
    for (const auto& t : out_[from])
        if (t.label == label && t.target == to)
            return;
    out_[from].push_back({label, to});
}

void lts::add_transition(const std::string& from, const symbol& label, const std::string& to)
{
    const state_id f = add_state(from);
    const state_id t = add_state(to);
    add_transition(f, label, t);
}

void lts::set_initial(state_id s)
{
    if (s >= names_.size())
        throw std::out_of_range("initial state is not a state of the system");
    initial_ = s;
}

state_id lts::initial() const
{
    if (!initial_)
        throw std::logic_error("system has no initial state");
    return *initial_;
}

std::size_t lts::transition_count() const
{
    std::size_t n = 0;
    for (const auto& ts : out_)
        n += ts.size();
    return n;
}

bool lts::has_output_or_quiescence(state_id s) const
{
    for (const auto& t : out_.at(s))
        if (t.label.is_output_side())
            return true;
    return false;
}

bool lts::has_quiescence(state_id s) const
{
    for (const auto& t : out_.at(s))
        if (t.label.is_quiescence())
            return true;
    return false;
}

standard_lts quiescence_closure(const lts& system)
{
    lts closed = system;
    for (state_id s = 0; s < closed.state_count(); ++s)
        if (!closed.has_output_or_quiescence(s))
            closed.add_transition(s, symbol::quiescence(), s);
    return standard_lts{std::move(closed), true};
}

standard_lts terminal_closure(const lts& system)
{
    lts closed = system;
    for (state_id s = 0; s < closed.state_count(); ++s)
        if (closed.transitions_from(s).empty())
            closed.add_transition(s, symbol::quiescence(), s);
    return standard_lts{std::move(closed), true};
}

namespace {

using state_set = std::set<state_id>;

std::map<symbol, state_set> successors(const lts& system, const state_set& states)
{
    std::map<symbol, state_set> next;
    for (state_id s : states)
        for (const auto& t : system.transitions_from(s))
            next[t.label].insert(t.target);
    return next;
}

void enumerate(const lts& system, trace& current, const state_set& states, std::size_t length,
               bool collect_all, std::set<trace>& result, std::size_t& visited, std::size_t budget)
{
    if (++visited > budget)
        throw resource_error("trace enumeration exceeded the node budget of " + std::to_string(budget)
                             + " prefixes");
    if (collect_all && !current.empty())
        result.insert(current);
    if (current.size() == length) {
        result.insert(current);
        return;
    }
    for (const auto& [label, next] : successors(system, states)) {
        current.push_back(label);
        enumerate(system, current, next, length, collect_all, result, visited, budget);
        current.pop_back();
    }
}

} // namespace

std::set<trace> enumerate_traces(const lts& system, std::size_t length, std::size_t node_budget)
{
    std::set<trace> result;
    trace current;
    std::size_t visited = 0;
    enumerate(system, current, {system.initial()}, length, false, result, visited, node_budget);
    return result;
}

std::set<trace> enumerate_traces_upto(const lts& system, std::size_t depth, std::size_t node_budget)
{
    std::set<trace> result;
    trace current;
    std::size_t visited = 0;
    enumerate(system, current, {system.initial()}, depth, true, result, visited, node_budget);
    result.erase(trace{});
    return result;
}

std::set<trace> traces_exact(const standard_lts& standard, std::size_t b, std::size_t node_budget)
{
    if (!standard.closed())
        throw domain_error("traces_exact needs a quiescence-closed standard");
    return enumerate_traces(standard.system(), b, node_budget);
}

std::set<state_id> after(const lts& system, const trace& t)
{
    state_set current{system.initial()};
    for (const auto& s : t) {
        state_set next;
        for (state_id q : current)
            for (const auto& tr : system.transitions_from(q))
                if (tr.label == s)
                    next.insert(tr.target);
        if (next.empty())
            return {};
        current = std::move(next);
    }
    return current;
}

std::set<state_id> after(const standard_lts& standard, const trace& t)
{
    return after(standard.system(), t);
}

std::set<symbol> out_set(const lts& system, const std::set<state_id>& states)
{
    std::set<symbol> out;
    for (state_id s : states)
        for (const auto& t : system.transitions_from(s))
            if (t.label.is_output_side())
                out.insert(t.label);
    return out;
}

std::set<symbol> out_set(const standard_lts& standard, const std::set<state_id>& states)
{
    return out_set(standard.system(), states);
}

standard_for_result is_standard_for(const lts& candidate, const lts& impl, std::size_t depth,
                                    std::size_t node_budget)
{
    standard_for_result result;
    result.depth = depth;
    std::set<projected_trace> projections;
    for (const auto& t : enumerate_traces_upto(candidate, depth, node_budget))
        projections.insert(project_inputs(t));
    for (const auto& t : enumerate_traces_upto(impl, depth, node_budget)) {
        if (!projections.contains(project_inputs(t)))
            continue;
        if (after(candidate, t).empty()) {
            result.holds = false;
            result.counterexample = t;
            break;
        }
    }
    return result;
}

} // namespace dopetest
