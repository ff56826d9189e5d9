#include "dopetest/strategies.hpp"

#include "dopetest/errors.hpp"

#include <fstream>
#include <istream>

namespace dopetest {

random_strategy::random_strategy(case_weights weights, std::uint64_t seed)
    : weights_{weights}, seed_{seed}, rng_{seed}
{
    if (weights.stop < 0 || weights.send < 0 || weights.await < 0)
        throw domain_error("case weights must be nonnegative");
    if (weights.stop + weights.send + weights.await <= 0)
        throw domain_error("case weights must not all be zero");
}

void random_strategy::start(const acceptance_oracle& oracle)
{
    oracle_ = &oracle;
    rng_.seed(seed_);
}

test_case random_strategy::choose_case(const trace&)
{
    std::discrete_distribution<int> pick{weights_.stop, weights_.send, weights_.await};
    switch (pick(rng_)) {
    case 0:
        return test_case::stop;
    case 1:
        return test_case::send_input;
    default:
        break;
    }
    return test_case::await_output;
}

decimal random_strategy::choose_input(const trace& h)
{
    if (oracle_ == nullptr)
        throw std::logic_error("random strategy used before start");
    const auto& domain = oracle_->contract_ref().input_domain();
    const interval_set near = oracle_->admissible_inputs(h);
    const std::int64_t count = domain.count_in(near);
    if (count > 0) {
        std::uniform_int_distribution<std::int64_t> pick{0, count - 1};
        return domain.nth_in(near, pick(rng_));
    }
    std::uniform_int_distribution<std::int64_t> pick{0, domain.size() - 1};
    return domain.at(pick(rng_));
}

void scripted_strategy::start(const acceptance_oracle&)
{
    next_ = 0;
}

test_case scripted_strategy::choose_case(const trace&)
{
    if (next_ >= script_.size())
        return test_case::await_output;
    if (!script_[next_]) {
        ++next_;
        return test_case::await_output;
    }
    return test_case::send_input;
}

decimal scripted_strategy::choose_input(const trace&)
{
    if (next_ >= script_.size() || !script_[next_])
        throw std::logic_error("scripted strategy has no input to send");
    return *script_[next_++];
}

test_case replay_strategy::choose_case(const trace& h)
{
    if (h.size() >= recording_.size())
        return test_case::stop;
    return recording_[h.size()].is_input() ? test_case::send_input : test_case::await_output;
}

decimal replay_strategy::choose_input(const trace& h)
{
    if (h.size() >= recording_.size() || !recording_[h.size()].is_input())
        throw std::logic_error("replay strategy has no input to send at this position");
    return recording_[h.size()].value;
}

std::vector<script_entry> parse_script(std::istream& in)
{
    std::vector<script_entry> script;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        const auto last = raw.find_last_not_of(" \t\r");
        const std::string line = raw.substr(first, last - first + 1);
        if (line == "wait") {
            script.emplace_back(std::nullopt);
            continue;
        }
        try {
            script.emplace_back(decimal::parse(line));
        } catch (const parse_error& e) {
            throw parse_error(e.what(), line_no);
        }
    }
    return script;
}

std::vector<script_entry> load_script(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw parse_error("cannot open script '" + path.string() + "'");
    return parse_script(in);
}

} // namespace dopetest
