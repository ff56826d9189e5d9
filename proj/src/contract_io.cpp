#include "dopetest/contract_io.hpp"

#include "dopetest/errors.hpp"
#include "dopetest/lts_io.hpp"
#include "dopetest/monitor.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace dopetest {

namespace {

struct entry {
    std::string value;
    std::size_t line = 0;
};

/// section -> key -> values in file order (keys may repeat).
using ini = std::map<std::string, std::map<std::string, std::vector<entry>>>;

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

ini parse_ini(std::istream& in)
{
    ini sections;
    std::string section;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw parse_error("malformed section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            sections[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", line_no);
        if (section.empty())
            throw parse_error("key outside of a section", line_no);
        sections[section][trim(line.substr(0, eq))].push_back({trim(line.substr(eq + 1)), line_no});
    }
    return sections;
}

const entry* find(const ini& doc, const std::string& section, const std::string& key)
{
    const auto s = doc.find(section);
    if (s == doc.end())
        return nullptr;
    const auto k = s->second.find(key);
    if (k == s->second.end() || k->second.empty())
        return nullptr;
    return &k->second.back();
}

const entry& require(const ini& doc, const std::string& section, const std::string& key)
{
    if (const entry* e = find(doc, section, key))
        return *e;
    throw parse_error("missing '" + key + "' in section [" + section + "]");
}

decimal require_decimal(const ini& doc, const std::string& section, const std::string& key)
{
    const entry& e = require(doc, section, key);
    try {
        return decimal::parse(e.value);
    } catch (const parse_error& err) {
        throw parse_error(err.what(), e.line);
    }
}

value_domain read_domain(const ini& doc, const std::string& section)
{
    return {require_decimal(doc, section, "lower"), require_decimal(doc, section, "upper"),
            require_decimal(doc, section, "step")};
}

std::string optional_value(const ini& doc, const std::string& section, const std::string& key,
                           const std::string& fallback)
{
    const entry* e = find(doc, section, key);
    return e != nullptr ? e->value : fallback;
}

standard_lts read_standard(const ini& doc, const std::filesystem::path& base_dir)
{
    const auto s = doc.find("standard");
    if (s == doc.end())
        throw parse_error("missing section [standard]");
    const auto& keys = s->second;
    const bool has_lts = keys.contains("lts");
    const bool has_traces = keys.contains("trace");
    if (has_lts == has_traces)
        throw parse_error("section [standard] needs either 'lts' or one or more 'trace' entries");

    if (has_lts) {
        const lts system = load_lts(base_dir / require(doc, "standard", "lts").value);
        const std::string closure = optional_value(doc, "standard", "closure", "quiescence");
        if (closure == "quiescence")
            return quiescence_closure(system);
        if (closure == "terminal")
            return terminal_closure(system);
        throw parse_error("unknown closure '" + closure + "'", require(doc, "standard", "closure").line);
    }

    const trace_format format = parse_trace_format(optional_value(doc, "standard", "format", "canonical"));
    std::size_t inputs = default_speed_inputs;
    if (const entry* e = find(doc, "standard", "inputs")) {
        try {
            inputs = static_cast<std::size_t>(std::stoul(e->value));
        } catch (const std::exception&) {
            throw parse_error("'inputs' must be a nonnegative integer", e->line);
        }
    }
    std::vector<trace> recordings;
    for (const auto& e : keys.at("trace"))
        recordings.push_back(load_trace(base_dir / e.value, format, inputs).symbols);
    return monitored_standard(recordings);
}

} // namespace

contract parse_contract(std::istream& in, const std::filesystem::path& base_dir)
{
    const ini doc = parse_ini(in);
    const thresholds kappa{require_decimal(doc, "thresholds", "kappa_in"),
                           require_decimal(doc, "thresholds", "kappa_out")};
    const value_domain input_domain = read_domain(doc, "input_domain");
    const value_domain output_domain = read_domain(doc, "output_domain");
    const distance_kind d_in = parse_distance_kind(optional_value(doc, "distance", "in", "last_abs"));
    const distance_kind d_out = parse_distance_kind(optional_value(doc, "distance", "out", "last_abs"));
    return contract{input_domain, output_domain, kappa, read_standard(doc, base_dir), d_in, d_out};
}

contract load_contract(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw parse_error("cannot open contract '" + path.string() + "'");
    return parse_contract(in, path.parent_path());
}

} // namespace dopetest
