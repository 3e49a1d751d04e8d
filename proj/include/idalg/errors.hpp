#ifndef IDALG_ERRORS_HPP
#define IDALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idalg {

// Bad argument from the caller (wrong modulus, q < 2, digit out of range...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact division by zero / evaluation at a pole.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A truncated series does not carry enough correct coefficients.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition between values was violated.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Syntax error with the byte offset of the offending character.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(std::size_t off, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace idalg

#endif
