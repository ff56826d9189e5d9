#pragma once

#include "dopetest/distance.hpp"
#include "dopetest/lts.hpp"
#include "dopetest/value_domain.hpp"

namespace dopetest {

struct thresholds {
    decimal kappa_in;
    decimal kappa_out;
};

/// Value domains, distances, thresholds and the closed standard behaviour.
/// Immutable once built.
class contract {
public:
    /// Throws `domain_error` when a threshold is negative, the standard is
    /// not closed, or a standard label lies outside its domain.
    contract(value_domain input_domain, value_domain output_domain, thresholds kappa, standard_lts standard,
             distance_kind d_in = distance_kind::last_abs, distance_kind d_out = distance_kind::last_abs);

    [[nodiscard]] const value_domain& input_domain() const { return input_domain_; }
    [[nodiscard]] const value_domain& output_domain() const { return output_domain_; }
    [[nodiscard]] decimal kappa_in() const { return kappa_.kappa_in; }
    [[nodiscard]] decimal kappa_out() const { return kappa_.kappa_out; }
    [[nodiscard]] distance_kind d_in() const { return d_in_; }
    [[nodiscard]] distance_kind d_out() const { return d_out_; }
    [[nodiscard]] const standard_lts& standard() const { return standard_; }

    /// True when `s` is an input or output on its grid, or quiescence.
    [[nodiscard]] bool in_domain(const symbol& s) const;
    /// Snaps input and output values onto their grids.
    [[nodiscard]] symbol snap(const symbol& s) const;
    [[nodiscard]] trace snap(const trace& t) const;

private:
    value_domain input_domain_;
    value_domain output_domain_;
    thresholds kappa_;
    standard_lts standard_;
    distance_kind d_in_;
    distance_kind d_out_;
};

} // namespace dopetest
