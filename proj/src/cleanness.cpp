#include "dopetest/cleanness.hpp"

#include "dopetest/errors.hpp"

#include <algorithm>
#include <map>

namespace dopetest {

namespace {

/// Output-side symbols at each position among traces sharing one input projection.
using output_options = std::vector<std::set<symbol>>;

bool matched(const std::set<symbol>& options, const symbol& target, decimal kappa_out)
{
    const projected_symbol want = project_output(target);
    return std::any_of(options.begin(), options.end(), [&](const symbol& s) {
        return d_out_delta(project_output(s), want) <= distance{kappa_out};
    });
}

} // namespace

cleanness_result robustly_clean_bounded(const standard_lts& impl, const contract& c, std::size_t depth,
                                        std::size_t node_budget)
{
    if (!impl.closed())
        throw domain_error("cleanness check needs a quiescence-closed implementation");
    cleanness_result result;
    result.depth = depth;

    const auto traces = enumerate_traces(impl.system(), depth, node_budget);
    std::map<projected_trace, output_options> by_projection;
    for (const auto& t : traces) {
        auto& options = by_projection[project_inputs(t)];
        options.resize(depth);
        for (std::size_t k = 0; k < t.size(); ++k)
            options[k].insert(t[k]);
    }

    const auto standard = traces_exact(c.standard(), depth, node_budget);
    const distance kappa_in{c.kappa_in()};
    for (const auto& sigma : standard) {
        if (!traces.contains(sigma))
            continue;
        const auto pi = project_inputs(sigma);
        const auto& same_inputs = by_projection.at(pi);
        for (const auto& sigma_prime : traces) {
            const auto pi_prime = project_inputs(sigma_prime);
            const auto& prime_inputs = by_projection.at(pi_prime);
            for (std::size_t k = 0; k < depth; ++k) {
                if (d_in_last(pi[k], pi_prime[k]) > kappa_in)
                    break;
                if (!matched(same_inputs[k], sigma_prime[k], c.kappa_out())) {
                    result.clean = false;
                    result.counterexample = cleanness_counterexample{2, sigma, sigma_prime, k + 1};
                    return result;
                }
                if (!matched(prime_inputs[k], sigma[k], c.kappa_out())) {
                    result.clean = false;
                    result.counterexample = cleanness_counterexample{1, sigma, sigma_prime, k + 1};
                    return result;
                }
            }
        }
    }
    return result;
}

} // namespace dopetest
