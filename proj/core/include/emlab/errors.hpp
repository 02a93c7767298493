#ifndef EMLAB_ERRORS_HPP
#define EMLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different variable universes, or group elements have
// incompatible (n, r).
struct DimensionError : Error {
    using Error::Error;
};

// exact_div was asked for a quotient that does not exist in Z[vars].
struct DivisibilityError : Error {
    using Error::Error;
};

// A denominator factor has constant term != 1 and cannot be inverted as a
// formal power series.
struct NotInvertibleAsSeries : Error {
    using Error::Error;
};

// An unbounded product or series needs a finite degree cap that was not
// supplied.
struct TruncationRequired : Error {
    using Error::Error;
};

// Statistic/convention combination the definitions do not support.
struct ConventionError : Error {
    using Error::Error;
};

// Out-of-range or malformed parameter (identity ids, specialization tags,
// grids).
struct ParameterError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace emlab

#endif
