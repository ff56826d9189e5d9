#pragma once

#include "dopetest/decimal.hpp"

#include <cstddef>
#include <vector>

namespace dopetest::cycles {

/// Samples per cycle, one per second.
inline constexpr std::size_t cycle_length = 1180;

/// NEDC reference speed in km/h at time `t` seconds, piecewise linear.
double nedc_speed(double t);

/// Speed samples for t = 0 .. cycle_length-1, rounded to 0.01 km/h.
std::vector<decimal> nedc();

/// NEDC plus 5 sin(0.5 t), floored at 0.
std::vector<decimal> sine_nedc();

/// NEDC with the 15 to 32 km/h acceleration of each urban cycle raised to
/// 1.5 m/s^2 (starting at 56, 251, 446 and 641 s).
std::vector<decimal> power_nedc();

} // namespace dopetest::cycles
