#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace udcount {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& what)
        : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally invalid argument (loop arc, bad partition, invalid labeling, ...).
class invalid_input : public error {
public:
    using error::error;
};

/// A forced counting method does not apply to the given graph.
class method_inapplicable : public error {
public:
    using error::error;
};

/// Exhaustive enumeration refused because the instance exceeds the arc cap.
class cap_exceeded : public error {
public:
    cap_exceeded(std::size_t arcs, std::size_t cap)
        : error("exhaustive enumeration refused: " + std::to_string(arcs) +
                " arcs exceed the brute-force cap of " + std::to_string(cap)),
          arcs_(arcs), cap_(cap) {}

    std::size_t arcs() const noexcept { return arcs_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t arcs_;
    std::size_t cap_;
};

/// Two counting routes disagreed.
class verification_failure : public error {
public:
    using error::error;
};

}  // namespace udcount
