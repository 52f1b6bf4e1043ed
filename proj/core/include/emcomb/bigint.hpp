#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace emcomb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i; // always exact: r is binomial(a-b+i, i) after this step
    }
    return r;
}

inline BigInt factorial(long long a) {
    BigInt r = 1;
    for (long long i = 2; i <= a; ++i) r *= i;
    return r;
}

// rising product x(x+1)...(x+k-1), empty product for k <= 0
inline BigInt rising(long long x, long long k) {
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r *= x + i;
    return r;
}

} // namespace emcomb
