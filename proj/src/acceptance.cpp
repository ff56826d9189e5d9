#include "dopetest/acceptance.hpp"

#include "dopetest/errors.hpp"

#include <algorithm>
#include <map>

namespace dopetest {

acceptance_oracle::acceptance_oracle(const contract& c, std::size_t bound, std::size_t node_budget)
    : contract_{c}, bound_{bound}
{
    if (bound == 0)
        throw bound_error("the oracle bound must be positive");

    std::map<projected_trace, std::size_t> index;
    for (const auto& t : traces_exact(c.standard(), bound, node_budget)) {
        auto projection = project_inputs(t);
        auto [it, inserted] = index.try_emplace(projection, groups_.size());
        if (inserted) {
            trace_group g;
            g.projection = std::move(projection);
            g.outputs.resize(bound);
            g.representative = t;
            groups_.push_back(std::move(g));
        }
        trace_group& g = groups_[it->second];
        ++g.members;
        for (std::size_t k = 0; k < t.size(); ++k)
            if (t[k].is_output_side())
                g.outputs[k].insert(t[k]);
    }
}

void acceptance_oracle::require_below_bound(const trace& h) const
{
    if (h.size() >= bound_)
        throw bound_error("history of length " + std::to_string(h.size()) + " reaches the bound "
                          + std::to_string(bound_));
}

bool acceptance_oracle::input_close(const trace_group& g, std::size_t pos, const symbol& s) const
{
    return d_in_last(project_input(s), g.projection[pos]) <= distance{contract_.kappa_in()};
}

std::vector<std::size_t> acceptance_oracle::live_groups(const trace& h) const
{
    if (h.size() > bound_)
        throw bound_error("history of length " + std::to_string(h.size()) + " exceeds the bound "
                          + std::to_string(bound_));

    std::lock_guard lock{memo_mutex_};
    if (memo_.live.empty()) {
        std::vector<std::size_t> all(groups_.size());
        for (std::size_t k = 0; k < all.size(); ++k)
            all[k] = k;
        memo_.live.push_back(std::move(all));
    }

    const std::size_t limit = std::min(h.size(), memo_.history.size());
    std::size_t common = 0;
    while (common < limit && h[common] == memo_.history[common])
        ++common;
    memo_.history.resize(common);
    memo_.live.resize(common + 1);

    for (std::size_t k = common; k < h.size(); ++k) {
        std::vector<std::size_t> next;
        for (std::size_t g : memo_.live.back())
            if (input_close(groups_[g], k, h[k]))
                next.push_back(g);
        memo_.history.push_back(h[k]);
        memo_.live.push_back(std::move(next));
    }
    return memo_.live[h.size()];
}

std::vector<std::size_t> acceptance_oracle::output_groups(const trace& h) const
{
    require_below_bound(h);
    std::vector<std::size_t> result;
    for (std::size_t g : live_groups(h))
        if (groups_[g].projection[h.size()].kind == projected_kind::masked_input)
            result.push_back(g);
    return result;
}

acceptance_check acceptance_oracle::check(const trace& h, const symbol& o) const
{
    if (!o.is_output_side())
        throw domain_error("only outputs and quiescence can be checked for acceptance");
    const auto candidates = output_groups(h);
    if (candidates.empty())
        return {true, true, std::nullopt};

    const distance bound{contract_.kappa_out()};
    for (std::size_t g : candidates) {
        const auto& options = groups_[g].outputs[h.size()];
        const bool matched = std::any_of(options.begin(), options.end(),
                                         [&](const symbol& s) { return d_out_delta(o, s) <= bound; });
        if (!matched)
            return {false, false, groups_[g].representative};
    }
    return {true, false, std::nullopt};
}

output_region acceptance_oracle::region(const trace& h) const
{
    const auto candidates = output_groups(h);
    output_region r;
    r.intervals = {contract_.output_domain().whole()};
    r.quiescence = true;
    if (candidates.empty()) {
        r.vacuous = true;
        return r;
    }

    const decimal kappa = contract_.kappa_out();
    for (std::size_t g : candidates) {
        interval_set tube;
        bool quiescent = false;
        for (const auto& s : groups_[g].outputs[h.size()]) {
            if (s.is_quiescence())
                quiescent = true;
            else
                tube.push_back({s.value - kappa, s.value + kappa});
        }
        r.intervals = intersect(r.intervals, normalize(std::move(tube)));
        r.quiescence = r.quiescence && quiescent;
    }
    return r;
}

acceptance_set acceptance_oracle::acc(const trace& h) const
{
    const output_region r = region(h);
    acceptance_set result;
    result.vacuous = r.vacuous;
    for (const auto& v : contract_.output_domain().points_in(r.intervals))
        result.outputs.insert(symbol::output(v));
    if (r.quiescence)
        result.outputs.insert(symbol::quiescence());
    return result;
}

interval_set acceptance_oracle::admissible_inputs(const trace& h) const
{
    require_below_bound(h);
    const decimal kappa = contract_.kappa_in();
    interval_set set;
    for (std::size_t g : live_groups(h)) {
        const auto& p = groups_[g].projection[h.size()];
        if (p.kind == projected_kind::input)
            set.push_back({p.value - kappa, p.value + kappa});
    }
    return intersect(normalize(std::move(set)), {contract_.input_domain().whole()});
}

acceptance_set acc_b(const contract& c, const trace& h, std::size_t b)
{
    return acceptance_oracle{c, b}.acc(h);
}

} // namespace dopetest
