#pragma once

#include <utility>
#include <vector>

#include "agol3/mat2.hpp"
#include "agol3/quadnum.hpp"
#include "agol3/splitting.hpp"

namespace agol3 {

/// A fraction in [0, 1], kept exactly as constructed (the mediant
/// recursion is never simplified).
struct FareyFraction {
    Int num;
    Int den;

    bool same_value(const FareyFraction& o) const { return num * o.den == o.num * den; }
    bool operator==(const FareyFraction&) const = default;
    std::string str() const { return num.str() + "/" + den.str(); }
};

/// Ordered Farey sequence L_k of size 2^k + 1, built by repeated mediant
/// insertion. Exponential in k; test scaffolding only (k <= 20).
std::vector<FareyFraction> farey_sequence(int k);

/// eps * [[a, -b], [-a n - c, b n + d]] with a > 0, b, c, d >= 0 and
/// ad - bc = eps: the shape every interval matrix T(I_{k,i}) has.
struct FareyIntervalMat {
    int eps;
    Int a, b, c, d;
    Int n;

    Mat2 matrix() const {
        return {eps * a, eps * -b, eps * (-a * n - c), eps * (b * n + d)};
    }
};

enum class FareyStep { to_left, to_right }; // child i -> 2i-1 / i -> 2i

inline FareyStep step_of(Lr v) { return v == Lr::L ? FareyStep::to_left : FareyStep::to_right; }

/// Walks the interval-matrix recursion from T(I_{0,1}) = [[1,0],[-n,1]]
/// down the given child path and returns the eps/a/b/c/d decomposition.
FareyIntervalMat farey_T(const std::vector<FareyStep>& path, const Int& n);

/// Decomposes an interval matrix; throws decomposition_failure if it does
/// not have the required shape.
FareyIntervalMat decompose_interval_mat(const Mat2& m, const Int& n);

/// The open interval (lo, hi) the matrix encodes:
/// (1/(n + (c+d)/(a+b)), 1/(n + c/a)) for eps = 1, endpoints swapped for
/// eps = -1. Exact rationals.
std::pair<FareyFraction, FareyFraction> interval_endpoints(const FareyIntervalMat& m);

/// Independent Stern-Brocot reconstruction of the LR word: descends from
/// (0/1, 1/1) toward 1/alpha - n, emitting L or R by the exact mediant
/// comparison. Throws mediant_hit when the value equals a mediant
/// (non-irrational input).
std::vector<Lr> lr_oracle(const QuadNum& alpha, const Int& n, long long steps);

/// The nested Farey intervals J_1..J_steps produced alongside the descent.
std::vector<std::pair<FareyFraction, FareyFraction>>
nested_intervals(const QuadNum& alpha, const Int& n, long long steps);

} // namespace agol3
