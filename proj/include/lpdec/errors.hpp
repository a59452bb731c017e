#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpdec {

/// Input text could not be parsed; `line` is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A desk-scale enumeration guard was exceeded (codeword enumeration,
/// odd-subset blow-up, extreme-ray dimension, NSP LP budget).
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Observed data contradicts the parity/measurement equations during peeling.
class inconsistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certified implication of the theory failed to hold. This always means an
/// implementation bug, never a property of the input.
class soundness_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace lpdec
