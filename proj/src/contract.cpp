#include "dopetest/contract.hpp"

#include "dopetest/errors.hpp"

namespace dopetest {

contract::contract(value_domain input_domain, value_domain output_domain, thresholds kappa,
                   standard_lts standard, distance_kind d_in, distance_kind d_out)
    : input_domain_{std::move(input_domain)},
      output_domain_{std::move(output_domain)},
      kappa_{kappa},
      standard_{std::move(standard)},
      d_in_{d_in},
      d_out_{d_out}
{
    if (kappa_.kappa_in < decimal{} || kappa_.kappa_out < decimal{})
        throw domain_error("thresholds must be nonnegative");
    if (!standard_.closed())
        throw domain_error("the standard of a contract must be quiescence-closed");
    const lts& s = standard_.system();
    if (!s.has_initial())
        throw domain_error("the standard has no initial state");
    for (state_id q = 0; q < s.state_count(); ++q)
        for (const auto& t : s.transitions_from(q))
            if (!in_domain(t.label))
                throw domain_error("standard label " + to_label(t.label) + " lies outside its domain");
}

bool contract::in_domain(const symbol& s) const
{
    switch (s.kind) {
    case symbol_kind::input:
        return input_domain_.contains(s.value);
    case symbol_kind::output:
        return output_domain_.contains(s.value);
    case symbol_kind::quiescence:
        break;
    }
    return true;
}

symbol contract::snap(const symbol& s) const
{
    switch (s.kind) {
    case symbol_kind::input:
        return symbol::input(input_domain_.snap(s.value));
    case symbol_kind::output:
        return symbol::output(output_domain_.snap(s.value));
    case symbol_kind::quiescence:
        break;
    }
    return s;
}

trace contract::snap(const trace& t) const
{
    trace out;
    out.reserve(t.size());
    for (const auto& s : t)
        out.push_back(snap(s));
    return out;
}

} // namespace dopetest
