#include "dopetest/engine.hpp"

#include "dopetest/errors.hpp"

#include <nlohmann/json.hpp>

#include <ostream>

namespace dopetest {

std::string to_string(outcome o)
{
    switch (o) {
    case outcome::pass:
        return "PASS";
    case outcome::fail:
        return "FAIL";
    case outcome::trivial_pass:
        break;
    }
    return "TRIVIAL";
}

verdict dt_run(const acceptance_oracle& oracle, sut_connection& sut, strategy& chooser, const run_options& options)
{
    const contract& c = oracle.contract_ref();
    const std::size_t bound = oracle.bound();
    sut.reset();
    chooser.start(oracle);

    verdict v;
    v.bound = bound;
    trace& h = v.history;
    std::optional<std::string> warning;

    auto log = [&](const std::string& line) {
        if (options.log != nullptr)
            *options.log << line << '\n';
    };

    // Records an output or quiescence; false when it is not acceptable.
    auto observe = [&](symbol o) {
        const std::size_t step = h.size() + 1;
        if (o.is_output())
            o = c.snap(o);
        const bool had_live = !oracle.live_groups(h).empty();
        const auto check = oracle.check(h, o);
        h.push_back(o);
        log("STEP " + std::to_string(step) + " RECV " + to_label(o));
        if (!check.accepted) {
            v.result = outcome::fail;
            v.witness = check.witness;
            v.reason = "output " + to_label(o) + " at step " + std::to_string(step)
                       + " is not within kappa_out of any output of a standard trace within kappa_in";
            return false;
        }
        if (check.vacuous && had_live && !warning)
            warning = "output awaited at step " + std::to_string(step)
                      + " where every standard trace within kappa_in expects an input; the test passes trivially";
        return true;
    };

    bool failed = false;
    while (!failed) {
        if (h.size() >= bound) {
            v.reason = "bound reached";
            break;
        }
        const test_case next = chooser.choose_case(h);
        if (next == test_case::stop) {
            v.reason = "stopped";
            break;
        }
        if (next == test_case::send_input) {
            if (auto pending = sut.poll()) {
                failed = !observe(symbol::output(*pending));
                continue;
            }
            const symbol input = c.snap(symbol::input(chooser.choose_input(h)));
            sut.send(input.value);
            h.push_back(input);
            log("STEP " + std::to_string(h.size()) + " SEND " + to_label(input));
            if (oracle.live_groups(h).empty() && !warning)
                warning = "input " + to_label(input) + " at step " + std::to_string(h.size())
                          + " deviates by more than kappa_in from every standard trace; the test passes trivially";
            continue;
        }
        failed = !observe(sut.receive(options.timeout));
    }

    if (!failed && warning) {
        v.result = outcome::trivial_pass;
        v.reason = *warning;
    }
    log("VERDICT " + to_string(v.result) + ' ' + v.reason);
    log(verdict_json(v, options.seed));
    return v;
}

verdict dt_run(const contract& c, sut_connection& sut, strategy& chooser, std::size_t bound,
               const run_options& options)
{
    const acceptance_oracle oracle{c, bound, node_budget_from_env()};
    return dt_run(oracle, sut, chooser, options);
}

std::string verdict_json(const verdict& v, std::uint64_t seed)
{
    nlohmann::ordered_json j;
    j["verdict"] = to_string(v.result);
    j["steps"] = v.history.size();
    j["bound"] = v.bound;
    j["seed"] = seed;
    j["reason"] = v.reason;
    j["history"] = to_record_list(v.history);
    j["witness"] = v.witness ? nlohmann::ordered_json(to_record_list(*v.witness)) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

} // namespace dopetest
