#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arctan_dioph {

// Arbitrary-precision integers everywhere; k^2+1 and l*(k^2+1) must never wrap.
// Natural values are non-negative by contract.
using Natural = boost::multiprecision::cpp_int;

// Exact rational, stored canonically reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Natural gcd(const Natural& a, const Natural& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace arctan_dioph
