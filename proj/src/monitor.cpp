#include "dopetest/monitor.hpp"

#include "dopetest/errors.hpp"
#include "dopetest/strategies.hpp"

#include <fstream>
#include <istream>
#include <set>

namespace dopetest {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

decimal parse_value(const std::string& text, std::size_t line_no)
{
    try {
        return decimal::parse(trim(text));
    } catch (const parse_error& e) {
        throw parse_error(e.what(), line_no);
    }
}

} // namespace

trace_format parse_trace_format(const std::string& name)
{
    if (name == "canonical")
        return trace_format::canonical;
    if (name == "speed-nox")
        return trace_format::speed_nox;
    throw parse_error("unknown trace format '" + name + "'");
}

trace parse_trace(std::istream& in, trace_format format, std::size_t inputs)
{
    trace t;
    std::string raw;
    std::size_t line_no = 0;
    std::size_t values = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (format == trace_format::speed_nox) {
            const decimal v = parse_value(line, line_no);
            if (values < inputs)
                t.push_back(symbol::input(v));
            else if (values == inputs)
                t.push_back(symbol::output(v));
            else
                throw parse_error("expected " + std::to_string(inputs) + " inputs and one output", line_no);
            ++values;
            continue;
        }
        if (line == "q") {
            t.push_back(symbol::quiescence());
        } else if (line.size() > 2 && (line[0] == 'i' || line[0] == 'o') && (line[1] == ' ' || line[1] == '\t')) {
            const decimal v = parse_value(line.substr(2), line_no);
            t.push_back(line[0] == 'i' ? symbol::input(v) : symbol::output(v));
        } else {
            throw parse_error("expected 'i <value>', 'o <value>' or 'q'", line_no);
        }
    }
    if (format == trace_format::speed_nox && values != 0 && values != inputs + 1)
        throw parse_error("expected " + std::to_string(inputs) + " inputs and one output, found "
                              + std::to_string(values) + " values",
                          line_no);
    return t;
}

recorded_trace load_trace(const std::filesystem::path& path, trace_format format, std::size_t inputs)
{
    std::ifstream in{path};
    if (!in)
        throw parse_error("cannot open trace file '" + path.string() + "'");
    return {parse_trace(in, format, inputs), path, format};
}

standard_lts monitored_standard(const std::vector<trace>& recordings)
{
    if (recordings.empty())
        throw domain_error("a monitored standard needs at least one recording");
    lts tree;
    const state_id root = tree.add_state("r");
    tree.set_initial(root);
    std::set<state_id> ends;
    for (const auto& t : recordings) {
        state_id at = root;
        for (const auto& s : t) {
            std::optional<state_id> next;
            for (const auto& tr : tree.transitions_from(at))
                if (tr.label == s)
                    next = tr.target;
            if (!next) {
                next = tree.add_state("r" + std::to_string(tree.state_count()));
                tree.add_transition(at, s, *next);
            }
            at = *next;
        }
        ends.insert(at);
    }
    for (state_id s : ends)
        if (!tree.has_output_or_quiescence(s))
            tree.add_transition(s, symbol::quiescence(), s);
    return standard_lts{std::move(tree), true};
}

standard_lts monitored_standard(const std::vector<recorded_trace>& recordings)
{
    std::vector<trace> traces;
    traces.reserve(recordings.size());
    for (const auto& r : recordings)
        traces.push_back(r.symbols);
    return monitored_standard(traces);
}

verdict monitor_verdict(const contract& c, const trace& recording, const run_options& options)
{
    if (recording.empty())
        throw domain_error("cannot monitor an empty recording");
    const trace snapped = c.snap(recording);
    replay_sut sut{snapped};
    replay_strategy replay{snapped};
    const acceptance_oracle oracle{c, snapped.size() + 1, node_budget_from_env()};
    return dt_run(oracle, sut, replay, options);
}

verdict monitor_verdict(const contract& c, const recorded_trace& recording, const run_options& options)
{
    return monitor_verdict(c, recording.symbols, options);
}

} // namespace dopetest
