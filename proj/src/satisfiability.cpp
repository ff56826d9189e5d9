#include "dopetest/satisfiability.hpp"

#include "dopetest/acceptance.hpp"
#include "dopetest/errors.hpp"

#include <deque>
#include <set>
#include <utility>

namespace dopetest {

namespace {

struct tube {
    interval_set intervals;
    bool quiescence = false;
};

tube tube_of(const trace_group& g, std::size_t pos, decimal kappa)
{
    tube t;
    for (const auto& s : g.outputs[pos]) {
        if (s.is_quiescence())
            t.quiescence = true;
        else
            t.intervals.push_back({s.value - kappa, s.value + kappa});
    }
    t.intervals = normalize(std::move(t.intervals));
    return t;
}

bool region_empty(const value_domain& out, const interval_set& intervals, bool quiescence)
{
    return !quiescence && out.count_in(intervals) == 0;
}

/// Grid inputs that together reach every distinct set of live groups
/// after the next input.
std::set<decimal> representative_inputs(const acceptance_oracle& oracle, const std::vector<std::size_t>& live,
                                        std::size_t pos)
{
    const auto& domain = oracle.contract_ref().input_domain();
    const decimal kappa = oracle.contract_ref().kappa_in();
    std::set<decimal> picks{domain.lower(), domain.upper()};
    auto add_around = [&](decimal edge) {
        for (auto p : {domain.first_at_or_above(edge), domain.last_at_or_below(edge)}) {
            if (!p)
                continue;
            picks.insert(*p);
            if (*p > domain.lower())
                picks.insert(*p - domain.step());
            if (*p < domain.upper())
                picks.insert(*p + domain.step());
        }
    };
    for (std::size_t g : live) {
        const auto& p = oracle.groups()[g].projection[pos];
        if (p.kind != projected_kind::input)
            continue;
        add_around(p.value - kappa);
        add_around(p.value + kappa);
    }
    return picks;
}

} // namespace

satisfiability_result check_satisfiable_bounded(const contract& c, std::size_t depth, std::size_t node_budget)
{
    satisfiability_result result;
    result.depth = depth;
    const acceptance_oracle oracle{c, depth, node_budget};
    const auto& out = c.output_domain();

    std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
    std::deque<trace> pending{trace{}};
    std::size_t visited = 0;
    while (!pending.empty()) {
        trace h = std::move(pending.front());
        pending.pop_front();
        if (h.size() >= depth)
            continue;
        const auto live = oracle.live_groups(h);
        if (!seen.emplace(h.size(), live).second)
            continue;
        if (++visited > node_budget)
            throw resource_error("satisfiability search exceeded the node budget of "
                                 + std::to_string(node_budget));

        const output_region r = oracle.region(h);
        if (!r.vacuous && region_empty(out, r.intervals, r.quiescence)) {
            result.satisfiable = false;
            result.witness = h;
            const auto candidates = oracle.output_groups(h);
            for (std::size_t a = 0; a < candidates.size() && result.conflicting.empty(); ++a) {
                const auto ta = tube_of(oracle.groups()[candidates[a]], h.size(), c.kappa_out());
                for (std::size_t b = a + 1; b < candidates.size(); ++b) {
                    const auto tb = tube_of(oracle.groups()[candidates[b]], h.size(), c.kappa_out());
                    if (region_empty(out, intersect(ta.intervals, tb.intervals), ta.quiescence && tb.quiescence)) {
                        result.conflicting = {oracle.groups()[candidates[a]].representative,
                                              oracle.groups()[candidates[b]].representative};
                        break;
                    }
                }
            }
            if (result.conflicting.empty())
                for (std::size_t g : candidates)
                    result.conflicting.push_back(oracle.groups()[g].representative);
            result.explanation = "no output and no quiescence is acceptable at position "
                                 + std::to_string(h.size() + 1) + " after history " + to_record_list(h);
            return result;
        }

        if (r.quiescence) {
            trace next = h;
            next.push_back(symbol::quiescence());
            pending.push_back(std::move(next));
        } else {
            trace next = h;
            next.push_back(symbol::output(out.nth_in(r.intervals, 0)));
            pending.push_back(std::move(next));
        }
        for (const auto& v : representative_inputs(oracle, live, h.size())) {
            trace next = h;
            next.push_back(symbol::input(v));
            pending.push_back(std::move(next));
        }
    }

    result.standard_cleanness = robustly_clean_bounded(c.standard(), c, depth, node_budget);
    if (!result.standard_cleanness->clean) {
        result.satisfiable = false;
        result.explanation = "the standard itself is not robustly clean";
        return result;
    }
    result.explanation = "satisfiable up to depth " + std::to_string(depth);
    return result;
}

} // namespace dopetest
