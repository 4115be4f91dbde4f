#pragma once

#include <stdexcept>
#include <string>

namespace fnom {

// Base of all library errors. The CLI maps anything derived from this to
// exit code 2 with a one-line diagnostic on stderr.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration or construction would exceed its configured cap. Caps are
// hard errors, never silent truncation.
struct CapExceeded : Error {
    using Error::Error;
};

// The sequence kind has no two-term triangle recurrence.
struct UnsupportedRecurrence : Error {
    using Error::Error;
};

// The product-formula quotient left a remainder. Cannot occur for the
// built-in sequence kinds; guards future ones.
struct NonIntegralFnomial : Error {
    using Error::Error;
};

struct BadRange : Error {
    using Error::Error;
};

struct BadVertex : Error {
    using Error::Error;
};

struct NonPrimeField : Error {
    using Error::Error;
};

struct CyclicGraph : Error {
    using Error::Error;
};

struct BadArgument : Error {
    using Error::Error;
};

}  // namespace fnom
