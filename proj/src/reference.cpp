#include "dopetest/reference.hpp"

#include "dopetest/errors.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

namespace dopetest {

std::string history_name(const trace& h)
{
    return to_record_list(h);
}

std::set<symbol> bounded_reference::enabled_outputs(const trace& h) const
{
    std::set<symbol> out;
    for (const auto& s : enabled(h))
        if (s.is_output_side())
            out.insert(s);
    return out;
}

lts bounded_reference::to_lts() const
{
    lts system;
    for (const auto& [h, labels] : enabled_)
        system.add_state(history_name(h));
    for (const auto& [h, labels] : enabled_) {
        const state_id from = *system.find_state(history_name(h));
        for (const auto& a : labels) {
            trace next = h;
            next.push_back(a);
            system.add_transition(from, a, system.add_state(history_name(next)));
        }
    }
    system.set_initial(*system.find_state(history_name({})));
    return system;
}

void bounded_reference::dump(std::ostream& out) const
{
    for (const auto& [h, labels] : enabled_) {
        out << history_name(h) << " | enabled:";
        if (labels.empty())
            out << " none";
        for (const auto& a : labels)
            out << ' ' << to_label(a);
        out << '\n';
    }
}

bounded_reference build_reference_bounded(const contract& c, std::size_t depth, std::size_t node_budget)
{
    const acceptance_oracle oracle{c, depth, node_budget};
    std::vector<symbol> inputs;
    for (const auto& v : c.input_domain().points())
        inputs.push_back(symbol::input(v));

    bounded_reference ref;
    ref.depth_ = depth;
    std::deque<trace> pending{trace{}};
    while (!pending.empty()) {
        trace h = std::move(pending.front());
        pending.pop_front();
        if (ref.enabled_.size() >= node_budget)
            throw resource_error("reference construction exceeded the node budget of "
                                 + std::to_string(node_budget) + " states");
        std::vector<symbol> labels;
        if (h.size() < depth) {
            labels = inputs;
            const auto accepted = oracle.acc(h);
            labels.insert(labels.end(), accepted.outputs.begin(), accepted.outputs.end());
            std::sort(labels.begin(), labels.end());
            for (const auto& a : labels) {
                trace next = h;
                next.push_back(a);
                pending.push_back(std::move(next));
            }
        }
        ref.enabled_.emplace(std::move(h), std::move(labels));
    }
    return ref;
}

ioco_result ioco_check_bounded(const standard_lts& impl, const bounded_reference& reference, std::size_t depth,
                               std::size_t node_budget)
{
    if (!impl.closed())
        throw domain_error("ioco check needs a quiescence-closed implementation");
    ioco_result result;
    result.depth = depth;
    const lts& system = impl.system();

    struct node {
        trace history;
        std::set<state_id> states;
    };
    std::deque<node> pending{{trace{}, {system.initial()}}};
    std::size_t visited = 0;
    while (!pending.empty()) {
        node n = std::move(pending.front());
        pending.pop_front();
        if (++visited > node_budget)
            throw resource_error("ioco check exceeded the node budget of " + std::to_string(node_budget));
        if (n.history.size() >= depth || !reference.contains(n.history))
            continue;

        const auto allowed = reference.enabled_outputs(n.history);
        for (const auto& o : out_set(system, n.states)) {
            if (!allowed.contains(o)) {
                result.conforms = false;
                result.history = n.history;
                result.output = o;
                return result;
            }
        }

        std::map<symbol, std::set<state_id>> next;
        for (state_id s : n.states)
            for (const auto& t : system.transitions_from(s))
                next[t.label].insert(t.target);
        const auto& enabled = reference.enabled(n.history);
        for (auto& [label, states] : next) {
            if (!std::binary_search(enabled.begin(), enabled.end(), label))
                continue;
            trace h = n.history;
            h.push_back(label);
            pending.push_back({std::move(h), std::move(states)});
        }
    }
    return result;
}

} // namespace dopetest
