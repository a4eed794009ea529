#pragma once

#include <string>

#include "agol3/bigint.hpp"

namespace agol3 {

/// 2x2 integer matrix acting on weight column vectors.
struct Mat2 {
    Int m11{1}, m12{0}, m21{0}, m22{1};

    static Mat2 identity() { return {}; }

    Mat2 operator*(const Mat2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }

    Int det() const { return m11 * m22 - m12 * m21; }
    Int trace() const { return m11 + m22; }

    bool operator==(const Mat2&) const = default;

    std::string str() const {
        return "[[" + m11.str() + ", " + m12.str() + "], [" + m21.str() + ", " + m22.str() + "]]";
    }
};

// Generator-action matrices. T*B^-1 = B*T and V*A^-1 = A*V, so the
// per-syllable composites do not depend on where the type flip happens
// inside a syllable.
inline Mat2 mat_A() { return {1, 0, 1, 1}; }
inline Mat2 mat_A_inv() { return {1, 0, -1, 1}; }
inline Mat2 mat_V() { return {1, 0, 1, -1}; }
inline Mat2 mat_B() { return {1, 1, 0, 1}; }
inline Mat2 mat_B_inv() { return {1, -1, 0, 1}; }
inline Mat2 mat_T() { return {-1, 1, 0, 1}; }

inline Mat2 mat_A_pow(const Int& k) { return {1, 0, k, 1}; }
inline Mat2 mat_B_pow(const Int& k) { return {1, k, 0, 1}; }

} // namespace agol3
