#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace milnor {

/// Arbitrary-precision integer used for series coefficients and invariant
/// values.
using Int = boost::multiprecision::cpp_int;

/// Least non-negative representative of a modulo n (n >= 1).
inline Int positive_mod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

}  // namespace milnor
