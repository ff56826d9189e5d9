#include "dopetest/sut.hpp"

#include "dopetest/errors.hpp"

#include <cmath>

namespace dopetest {

noisy_mirror::noisy_mirror(noisy_mirror_config config) : config_{config}, rng_{config.seed} {}

void noisy_mirror::send(decimal input)
{
    const std::int64_t step = config_.output_step.units();
    std::int64_t units = 0;
    if (input.decimal_places() > config_.decimals_threshold) {
        std::uniform_real_distribution<double> factor{1.0, config_.doped_max_factor.to_double()};
        const double scaled = static_cast<double>(input.units()) * factor(rng_);
        units = std::llround(scaled / static_cast<double>(step)) * step;
    } else {
        std::bernoulli_distribution twice{0.5};
        units = twice(rng_) ? 2 * input.units() : input.units();
        units = (units / step) * step;
    }
    pending_.push_back(decimal::from_units(units));
}

std::optional<decimal> noisy_mirror::poll()
{
    if (pending_.empty())
        return std::nullopt;
    const decimal v = pending_.front();
    pending_.erase(pending_.begin());
    return v;
}

symbol noisy_mirror::receive(std::chrono::milliseconds)
{
    if (auto v = poll())
        return symbol::output(*v);
    return symbol::quiescence();
}

void noisy_mirror::reset()
{
    rng_.seed(config_.seed);
    pending_.clear();
}

lts_player::lts_player(lts system, std::uint64_t seed) : system_{std::move(system)}, seed_{seed}, rng_{seed}
{
    arrive(system_.initial());
}

void lts_player::arrive(state_id s)
{
    state_ = s;
    choice_.reset();
    std::vector<transition> options;
    for (const auto& t : system_.transitions_from(s))
        if (t.label.is_output_side())
            options.push_back(t);
    if (options.empty())
        return;
    std::uniform_int_distribution<std::size_t> pick{0, options.size() - 1};
    choice_ = options[pick(rng_)];
}

void lts_player::send(decimal input)
{
    for (const auto& t : system_.transitions_from(state_)) {
        if (t.label == symbol::input(input)) {
            arrive(t.target);
            return;
        }
    }
    throw sut_error(sut_error::kind::input_rejected,
                    "input " + input.to_string() + " is not enabled in state '" + system_.name(state_) + "'");
}

std::optional<decimal> lts_player::poll()
{
    if (!choice_ || !choice_->label.is_output())
        return std::nullopt;
    const transition taken = *choice_;
    arrive(taken.target);
    return taken.label.value;
}

symbol lts_player::receive(std::chrono::milliseconds)
{
    if (auto v = poll())
        return symbol::output(*v);
    if (choice_ && choice_->label.is_quiescence())
        arrive(choice_->target);
    return symbol::quiescence();
}

void lts_player::reset()
{
    rng_.seed(seed_);
    arrive(system_.initial());
}

void replay_sut::send(decimal input)
{
    if (position_ >= recording_.size() || recording_[position_] != symbol::input(input))
        throw sut_error(sut_error::kind::input_rejected,
                        "input " + input.to_string() + " does not match the recording at position "
                            + std::to_string(position_ + 1));
    ++position_;
}

std::optional<decimal> replay_sut::poll()
{
    if (position_ < recording_.size() && recording_[position_].is_output())
        return recording_[position_++].value;
    return std::nullopt;
}

symbol replay_sut::receive(std::chrono::milliseconds)
{
    if (auto v = poll())
        return symbol::output(*v);
    if (position_ < recording_.size() && recording_[position_].is_quiescence())
        ++position_;
    return symbol::quiescence();
}

} // namespace dopetest
