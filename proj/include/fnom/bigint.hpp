#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fnom {

// Exact arbitrary-precision integer used for every coefficient, count and
// determinant in the library. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

// Exact quotient; throws if the division leaves a remainder.
template <typename E>
Int exact_div(const Int& num, const Int& den, const char* what) {
    Int quo, rem;
    boost::multiprecision::divide_qr(num, den, quo, rem);
    if (rem != 0) throw E(what);
    return quo;
}

}  // namespace fnom
