#include "dopetest/lts_io.hpp"

#include "dopetest/errors.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

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

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in{line};
    while (std::getline(in, field, '\t'))
        fields.push_back(trim(field));
    return fields;
}

} // namespace

lts parse_lts(std::istream& in)
{
    lts system;
    std::optional<std::string> initial;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        if (line.find('\t') != std::string::npos) {
            const auto fields = split_tabs(line);
            if (fields.size() != 3 || fields[0].empty() || fields[2].empty())
                throw parse_error("expected 'state<TAB>label<TAB>state'", line_no);
            symbol label;
            try {
                label = parse_label(fields[1]);
            } catch (const parse_error& e) {
                throw parse_error(e.what(), line_no);
            }
            system.add_transition(fields[0], label, fields[2]);
            continue;
        }

        std::istringstream words{line};
        std::string keyword;
        words >> keyword;
        if (keyword == "initial") {
            const std::string name = trim(line.substr(keyword.size()));
            if (name.empty())
                throw parse_error("'initial' needs a state name", line_no);
            initial = name;
        } else if (keyword == "input" || keyword == "output") {
            std::string value;
            while (words >> value) {
                decimal v;
                try {
                    v = decimal::parse(value);
                } catch (const parse_error& e) {
                    throw parse_error(e.what(), line_no);
                }
                if (keyword == "input")
                    system.add_input(v);
                else
                    system.add_output(v);
            }
        } else {
            throw parse_error("unknown line '" + line + "'", line_no);
        }
    }

    if (initial)
        system.set_initial(system.add_state(*initial));
    else if (system.state_count() > 0)
        system.set_initial(0);
    else
        throw parse_error("LTS has no states");
    return system;
}

lts load_lts(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw parse_error("cannot open LTS file '" + path.string() + "'");
    return parse_lts(in);
}

void write_lts(std::ostream& out, const lts& system)
{
    out << "initial " << system.name(system.initial()) << '\n';
    if (!system.inputs().empty()) {
        out << "input";
        for (const auto& v : system.inputs())
            out << ' ' << v.to_string();
        out << '\n';
    }
    if (!system.outputs().empty()) {
        out << "output";
        for (const auto& v : system.outputs())
            out << ' ' << v.to_string();
        out << '\n';
    }
    for (state_id s = 0; s < system.state_count(); ++s)
        for (const auto& t : system.transitions_from(s))
            out << system.name(s) << '\t' << to_label(t.label) << '\t' << system.name(t.target) << '\n';
}

} // namespace dopetest
