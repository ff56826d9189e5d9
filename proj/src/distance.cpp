#include "dopetest/distance.hpp"

#include "dopetest/errors.hpp"

namespace dopetest {

distance_kind parse_distance_kind(const std::string& name)
{
    if (name == "last_abs")
        return distance_kind::last_abs;
    throw parse_error("unknown distance '" + name + "'");
}

std::string to_string(distance_kind kind)
{
    switch (kind) {
    case distance_kind::last_abs:
        break;
    }
    return "last_abs";
}

distance d_in_last(const projected_symbol& a, const projected_symbol& b)
{
    if (!a.is_input_side() || !b.is_input_side())
        throw domain_error("input distance applied to " + to_string(a) + " and " + to_string(b));
    const bool a_masked = a.kind == projected_kind::masked_input;
    const bool b_masked = b.kind == projected_kind::masked_input;
    if (a_masked && b_masked)
        return decimal{};
    if (a_masked || b_masked)
        return distance::infinity();
    return abs(a.value - b.value);
}

distance d_out_delta(const projected_symbol& a, const projected_symbol& b)
{
    if (a.is_input_side() || b.is_input_side())
        throw domain_error("output distance applied to " + to_string(a) + " and " + to_string(b));
    if (a.kind == projected_kind::output && b.kind == projected_kind::output)
        return abs(a.value - b.value);
    if (a.kind == b.kind)
        return decimal{};
    return distance::infinity();
}

distance d_out_delta(const symbol& a, const symbol& b)
{
    if (a.is_input() || b.is_input())
        throw domain_error("output distance applied to " + to_label(a) + " and " + to_label(b));
    return d_out_delta(project_output(a), project_output(b));
}

bool prefix_inputs_within(const trace& h_plus, const projected_trace& sigma_i, decimal kappa_in)
{
    if (sigma_i.size() < h_plus.size())
        throw domain_error("input projection shorter than the history");
    const distance bound{kappa_in};
    for (std::size_t j = 0; j < h_plus.size(); ++j)
        if (d_in_last(project_input(h_plus[j]), sigma_i[j]) > bound)
            return false;
    return true;
}

} // namespace dopetest
