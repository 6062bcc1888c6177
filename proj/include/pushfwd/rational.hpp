// Exact rational scalars over arbitrary-precision integers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pushfwd {

using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

// Builds num/den in lowest terms with positive denominator.  The raw
// two-argument cpp_rational constructor rejects negative denominators,
// so normalize the sign first.
inline Scalar make_scalar(Integer num, Integer den) {
    if (den == 0)
        throw std::domain_error("make_scalar: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(num, den);
}

inline Scalar make_scalar(long long n) { return Scalar(n); }

inline std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace pushfwd
