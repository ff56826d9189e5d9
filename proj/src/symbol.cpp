#include "dopetest/symbol.hpp"

#include "dopetest/errors.hpp"

#include <algorithm>

namespace dopetest {

trace prefix(const trace& t, std::size_t k)
{
    return trace(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(std::min(k, t.size())));
}

projected_symbol project_input(const symbol& s)
{
    return s.is_input() ? projected_symbol::input(s.value) : projected_symbol::masked_input();
}

projected_symbol project_output(const symbol& s)
{
    switch (s.kind) {
    case symbol_kind::output:
        return projected_symbol::output(s.value);
    case symbol_kind::quiescence:
        return projected_symbol::quiescence();
    case symbol_kind::input:
        break;
    }
    return projected_symbol::masked_output();
}

projected_symbol project_output(const projected_symbol& s)
{
    switch (s.kind) {
    case projected_kind::output:
    case projected_kind::quiescence:
    case projected_kind::masked_output:
        return s;
    case projected_kind::input:
    case projected_kind::masked_input:
        break;
    }
    return projected_symbol::masked_output();
}

projected_trace project_inputs(const trace& t)
{
    projected_trace out;
    out.reserve(t.size());
    std::transform(t.begin(), t.end(), std::back_inserter(out),
                   [](const symbol& s) { return project_input(s); });
    return out;
}

projected_trace project_outputs(const trace& t)
{
    projected_trace out;
    out.reserve(t.size());
    std::transform(t.begin(), t.end(), std::back_inserter(out),
                   [](const symbol& s) { return project_output(s); });
    return out;
}

std::string to_label(const symbol& s)
{
    switch (s.kind) {
    case symbol_kind::input:
        return "i:" + s.value.to_string();
    case symbol_kind::output:
        return "o:" + s.value.to_string();
    case symbol_kind::quiescence:
        break;
    }
    return "q";
}

symbol parse_label(std::string_view text)
{
    if (text == "q")
        return symbol::quiescence();
    if (text.size() > 2 && text[1] == ':') {
        if (text[0] == 'i')
            return symbol::input(decimal::parse(text.substr(2)));
        if (text[0] == 'o')
            return symbol::output(decimal::parse(text.substr(2)));
    }
    throw parse_error("malformed label '" + std::string{text} + "'");
}

std::string to_record(const symbol& s)
{
    switch (s.kind) {
    case symbol_kind::input:
        return "i " + s.value.to_string();
    case symbol_kind::output:
        return "o " + s.value.to_string();
    case symbol_kind::quiescence:
        break;
    }
    return "q";
}

std::string to_string(const projected_symbol& s)
{
    switch (s.kind) {
    case projected_kind::input:
        return "i:" + s.value.to_string();
    case projected_kind::masked_input:
        return "-i";
    case projected_kind::output:
        return "o:" + s.value.to_string();
    case projected_kind::masked_output:
        return "-o";
    case projected_kind::quiescence:
        break;
    }
    return "q";
}

std::string to_string(const trace& t)
{
    if (t.empty())
        return "<empty>";
    std::string out;
    for (const auto& s : t) {
        if (!out.empty())
            out += ' ';
        out += to_label(s);
    }
    return out;
}

std::string to_record_list(const trace& t)
{
    if (t.empty())
        return "<empty>";
    std::string out;
    for (const auto& s : t) {
        if (!out.empty())
            out += ", ";
        out += to_record(s);
    }
    return out;
}

} // namespace dopetest
