#ifndef QHO_ERRORS_HPP
#define QHO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qho {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Composition or addition attempted between incompatible spaces.
struct DomainMismatch : Error {
    using Error::Error;
};

// Biproduct part / Fock sector index out of range.
struct IndexOutOfRange : Error {
    using Error::Error;
};

// A (co)monoid presentation failed its algebraic laws where they are required.
struct LawViolation : Error {
    using Error::Error;
};

// Malformed expression text.
struct SyntaxError : Error {
    std::size_t line;
    std::size_t column;
    SyntaxError(const std::string& msg, std::size_t line_, std::size_t column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// Well-formed expression whose sub-terms do not compose.
struct TypeError : Error {
    using Error::Error;
};

// Malformed JSON input (schema violations, bad shapes).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input carrying illegal values (NaN/Inf entries).
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace qho

#endif
