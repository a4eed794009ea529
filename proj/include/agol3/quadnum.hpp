#pragma once

#include <cstddef>
#include <string>

#include "agol3/bigint.hpp"
#include "agol3/error.hpp"

namespace agol3 {

enum class Ordering { less = -1, equal = 0, greater = 1 };

/// Exact element (p + q*sqrt(D))/r of a real quadratic field.
///
/// Canonical form: r > 0, gcd(p, q, r) = 1, D square-free, and D = 1
/// exactly when q = 0 (rational values). Two QuadNums are equal iff all
/// four fields are equal. A rational value is comparable with, and
/// promotable into, any field; mixing two distinct irrational radicands
/// raises incompatible_fields. All comparisons are integer sign tests;
/// there is no floating-point path.
class QuadNum {
public:
    QuadNum() : p_(0), q_(0), r_(1), d_(1) {}

    /// Canonicalizing constructor for (p + q*sqrt(D))/r.
    static QuadNum make(Int p, Int q, Int r, Int D);

    static QuadNum rational(Int num, Int den = 1) { return make(std::move(num), 0, std::move(den), 1); }
    static QuadNum of_int(long long v) { return rational(Int(v)); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& D() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    /// True when the two values live in a common field (shared D, or a
    /// rational on either side).
    bool compatible(const QuadNum& o) const { return d_ == o.d_ || q_ == 0 || o.q_ == 0; }

    int sign() const;

    QuadNum operator-() const;
    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator/(const QuadNum& o) const;
    QuadNum inverse() const;

    bool operator==(const QuadNum& o) const {
        return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_;
    }

    /// Exact total order; requires compatible fields.
    Ordering compare(const QuadNum& o) const;

    bool operator<(const QuadNum& o) const { return compare(o) == Ordering::less; }
    bool operator>(const QuadNum& o) const { return compare(o) == Ordering::greater; }
    bool operator<=(const QuadNum& o) const { return compare(o) != Ordering::greater; }
    bool operator>=(const QuadNum& o) const { return compare(o) != Ordering::less; }

    /// Unique integer k with k <= value < k + 1.
    Int floor() const;

    /// "(p + q*sqrt(D))/r" with rational values shortened to "p/r".
    std::string str() const;

    /// Decimal approximation, truncated to `digits` significant digits,
    /// computed by integer square-root bracketing. Display only; never
    /// used in any comparison.
    std::string approx(int digits = 10) const;

    std::size_t hash() const;

private:
    Int p_, q_, r_, d_;

    Int join_radicand(const QuadNum& o) const;
};

QuadNum operator*(long long k, const QuadNum& v);

enum class ArithOp { add, sub, mul, div, neg, inv };

/// Dispatch form of the field arithmetic (neg/inv ignore b).
QuadNum qf_arith(const QuadNum& a, const QuadNum& b, ArithOp op);

} // namespace agol3

template <>
struct std::hash<agol3::QuadNum> {
    std::size_t operator()(const agol3::QuadNum& v) const { return v.hash(); }
};
