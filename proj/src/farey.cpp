#include "agol3/farey.hpp"

namespace agol3 {

std::vector<FareyFraction> farey_sequence(int k) {
    if (k < 0 || k > 20) fail(Errc::budget_exceeded, "farey_sequence supports 0 <= k <= 20");
    std::vector<FareyFraction> cur = {{0, 1}, {1, 1}};
    for (int step = 0; step < k; ++step) {
        std::vector<FareyFraction> next;
        next.reserve(cur.size() * 2 - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            next.push_back(cur[i]);
            next.push_back({cur[i].num + cur[i + 1].num, cur[i].den + cur[i + 1].den});
        }
        next.push_back(cur.back());
        cur = std::move(next);
    }
    return cur;
}

FareyIntervalMat decompose_interval_mat(const Mat2& m, const Int& n) {
    if (m.m11 == 0) fail(Errc::decomposition_failure, "zero (1,1) entry");
    int eps = sgn(m.m11) > 0 ? 1 : -1;
    FareyIntervalMat out;
    out.eps = eps;
    out.n = n;
    out.a = eps * m.m11;
    out.b = -eps * m.m12;
    out.c = -eps * m.m21 - out.a * n;
    out.d = eps * m.m22 - out.b * n;
    if (out.a <= 0 || out.b < 0 || out.c < 0 || out.d < 0 ||
        out.a * out.d - out.b * out.c != eps)
        fail(Errc::decomposition_failure, "matrix is not of interval shape: " + m.str());
    return out;
}

FareyIntervalMat farey_T(const std::vector<FareyStep>& path, const Int& n) {
    Mat2 m{1, 0, -n, 1};
    const Mat2 split_keep{1, -1, 0, 1};  // (x, z) -> (x, z - x)
    const Mat2 split_swap{-1, 1, 1, 0};  // (x, z) -> (z - x, x)
    for (FareyStep st : path) {
        bool xpos = m.m11 > 0;
        if (st == FareyStep::to_right)
            m = m * (xpos ? split_swap : split_keep);
        else
            m = m * (xpos ? split_keep : split_swap);
    }
    return decompose_interval_mat(m, n);
}

std::pair<FareyFraction, FareyFraction> interval_endpoints(const FareyIntervalMat& m) {
    // 1/(n + c/a) = a/(a n + c), 1/(n + (c+d)/(a+b)) = (a+b)/((a+b) n + c + d)
    FareyFraction at_ca{m.a, m.a * m.n + m.c};
    FareyFraction at_mid{m.a + m.b, (m.a + m.b) * m.n + m.c + m.d};
    if (m.eps == 1) return {at_mid, at_ca};
    return {at_ca, at_mid};
}

namespace {

struct Descent {
    std::vector<Lr> letters;
    std::vector<std::pair<FareyFraction, FareyFraction>> intervals;
};

Descent descend(const QuadNum& alpha, const Int& n, long long steps) {
    QuadNum x = alpha.inverse() - QuadNum::rational(n);
    FareyFraction lo{0, 1}, hi{1, 1};
    Descent out;
    for (long long k = 0; k < steps; ++k) {
        FareyFraction mid{lo.num + hi.num, lo.den + hi.den};
        Ordering c = x.compare(QuadNum::rational(mid.num, mid.den));
        if (c == Ordering::equal)
            fail(Errc::mediant_hit, "value equals the mediant " + mid.str());
        if (c == Ordering::less) {
            out.letters.push_back(Lr::L);
            hi = mid;
        } else {
            out.letters.push_back(Lr::R);
            lo = mid;
        }
        out.intervals.emplace_back(lo, hi);
    }
    return out;
}

} // namespace

std::vector<Lr> lr_oracle(const QuadNum& alpha, const Int& n, long long steps) {
    return descend(alpha, n, steps).letters;
}

std::vector<std::pair<FareyFraction, FareyFraction>>
nested_intervals(const QuadNum& alpha, const Int& n, long long steps) {
    return descend(alpha, n, steps).intervals;
}

} // namespace agol3
