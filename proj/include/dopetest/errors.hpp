#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dopetest {

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_{line}
    {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A value outside a declared domain, or a symbol of the wrong side passed
/// to a distance.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An enumeration exceeded its node budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A history at or beyond the oracle bound.
class bound_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Failures talking to a system under test. These abort a run; they are
/// never turned into verdicts.
class sut_error : public std::runtime_error {
public:
    enum class kind { spawn_failure, protocol_violation, child_exited, input_rejected, io_failure };

    sut_error(kind k, const std::string& what) : std::runtime_error(what), kind_{k} {}

    [[nodiscard]] kind reason() const { return kind_; }

private:
    kind kind_;
};

} // namespace dopetest
