#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace agol3 {

using Int = boost::multiprecision::cpp_int;

inline int sgn(const Int& v) { return v.sign(); }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

/// Decomposes n > 0 as s^2 * d with d square-free, returning {s, d}.
///
/// Trial division runs to min(sqrt(n), 10^6); a perfect-square remainder is
/// extracted afterwards. This is complete for every radicand this library
/// produces (traces stay far below 10^12 on the supported word sizes); a
/// remainder with a square prime factor above 10^6 would be left in d.
inline std::pair<Int, Int> squarefree_decompose(Int n) {
    Int s = 1, d = 1;
    const Int bound = 1000000;
    for (Int f = 2; f * f <= n && f <= bound; ++f) {
        if (n % f == 0) {
            int e = 0;
            while (n % f == 0) {
                n /= f;
                ++e;
            }
            if (e & 1) d *= f;
            for (int i = 0; i < e / 2; ++i) s *= f;
        }
    }
    if (n > 1) {
        Int r = isqrt(n);
        if (r * r == n) {
            s *= r;
        } else {
            d *= n;
        }
    }
    return {s, d};
}

} // namespace agol3
