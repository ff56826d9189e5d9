#include "dopetest/cycles.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <cmath>
#include <utility>

namespace dopetest::cycles {

namespace {

// (time s, speed km/h) breakpoints of the NEDC profile.
constexpr std::pair<int, int> profile[] = {
    {0, 0},     {6, 0},     {11, 0},    {15, 15},   {23, 15},   {25, 10},   {28, 0},    {44, 0},
    {49, 0},    {54, 15},   {56, 15},   {61, 32},   {85, 32},   {93, 10},   {96, 0},    {112, 0},
    {117, 0},   {122, 15},  {124, 15},  {133, 35},  {135, 35},  {143, 50},  {155, 50},  {163, 35},
    {176, 35},  {178, 35},  {185, 10},  {188, 0},   {195, 0},   {201, 0},   {206, 0},   {210, 15},
    {218, 15},  {220, 10},  {223, 0},   {239, 0},   {244, 0},   {249, 15},  {251, 15},  {256, 32},
    {280, 32},  {288, 10},  {291, 0},   {307, 0},   {312, 0},   {317, 15},  {319, 15},  {328, 35},
    {330, 35},  {338, 50},  {350, 50},  {358, 35},  {371, 35},  {373, 35},  {380, 10},  {383, 0},
    {390, 0},   {396, 0},   {401, 0},   {405, 15},  {413, 15},  {415, 10},  {418, 0},   {434, 0},
    {439, 0},   {444, 15},  {446, 15},  {451, 32},  {475, 32},  {483, 10},  {486, 0},   {502, 0},
    {507, 0},   {512, 15},  {514, 15},  {523, 35},  {525, 35},  {533, 50},  {545, 50},  {553, 35},
    {566, 35},  {568, 35},  {575, 10},  {578, 0},   {585, 0},   {591, 0},   {596, 0},   {600, 15},
    {608, 15},  {610, 10},  {613, 0},   {629, 0},   {634, 0},   {639, 15},  {641, 15},  {646, 32},
    {670, 32},  {678, 10},  {681, 0},   {697, 0},   {702, 0},   {707, 15},  {709, 15},  {718, 35},
    {720, 35},  {728, 50},  {740, 50},  {748, 35},  {761, 35},  {763, 35},  {770, 10},  {773, 0},
    {780, 0},   {800, 0},   {805, 15},  {807, 15},  {816, 35},  {818, 35},  {826, 50},  {828, 50},
    {841, 70},  {891, 70},  {895, 60},  {899, 50},  {968, 50},  {981, 70},  {1031, 70}, {1066, 100},
    {1096, 100}, {1116, 120}, {1126, 120}, {1142, 80}, {1150, 50}, {1160, 0}, {1180, 0},
};

constexpr std::array<int, 4> power_starts{56, 251, 446, 641};
constexpr double power_from = 15.0;
constexpr double power_to = 32.0;
// 1.5 m/s^2 in km/h per second.
constexpr double power_rate = 1.5 * 3.6;

decimal round_speed(double v)
{
    return decimal::from_units(std::llround(v * 100.0) * (decimal::scale / 100));
}

} // namespace

double nedc_speed(double t)
{
    const auto& first = profile[0];
    const auto& last = profile[std::size(profile) - 1];
    if (t <= first.first)
        return first.second;
    if (t >= last.first)
        return last.second;
    const auto upper = std::upper_bound(std::begin(profile), std::end(profile), t,
                                        [](double x, const auto& p) { return x < p.first; });
    const auto lower = upper - 1;
    const double span = upper->first - lower->first;
    const double frac = (t - lower->first) / span;
    return lower->second + frac * (upper->second - lower->second);
}

std::vector<decimal> nedc()
{
    std::vector<decimal> out;
    out.reserve(cycle_length);
    for (std::size_t t = 0; t < cycle_length; ++t)
        out.push_back(round_speed(nedc_speed(static_cast<double>(t))));
    return out;
}

std::vector<decimal> sine_nedc()
{
    std::vector<decimal> out;
    out.reserve(cycle_length);
    for (std::size_t t = 0; t < cycle_length; ++t) {
        const double x = static_cast<double>(t);
        out.push_back(round_speed(std::max(0.0, nedc_speed(x) + 5.0 * std::sin(0.5 * x))));
    }
    return out;
}

std::vector<decimal> power_nedc()
{
    std::vector<decimal> out;
    out.reserve(cycle_length);
    for (std::size_t t = 0; t < cycle_length; ++t) {
        const double x = static_cast<double>(t);
        double v = nedc_speed(x);
        for (int start : power_starts)
            if (x >= start && x <= start + 5)
                v = std::min(power_to, power_from + power_rate * (x - start));
        out.push_back(round_speed(v));
    }
    return out;
}

} // namespace dopetest::cycles
