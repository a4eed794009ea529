#include "agol3/quadnum.hpp"

#include <boost/functional/hash.hpp>

namespace agol3 {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::invalid_radicand: return "InvalidRadicand";
        case Errc::incompatible_fields: return "IncompatibleFields";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_exponent: return "InvalidExponent";
        case Errc::not_flype_form: return "NotFlypeForm";
        case Errc::tie_weights: return "TieWeights";
        case Errc::non_positive_weight: return "NonPositiveWeight";
        case Errc::no_invariant_track: return "NoInvariantTrack";
        case Errc::not_pseudo_anosov: return "NotPseudoAnosov";
        case Errc::non_positive_eigenvector: return "NonPositiveEigenvector";
        case Errc::validity_failure: return "ValidityFailure";
        case Errc::tie_comparison: return "TieComparison";
        case Errc::alpha_out_of_range: return "AlphaOutOfRange";
        case Errc::rational_alpha: return "RationalAlpha";
        case Errc::no_cycle_within_budget: return "NoCycleWithinBudget";
        case Errc::scale_mismatch: return "ScaleMismatch";
        case Errc::mediant_hit: return "MediantHit";
        case Errc::decomposition_failure: return "DecompositionFailure";
        case Errc::budget_exceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

QuadNum QuadNum::make(Int p, Int q, Int r, Int D) {
    if (r == 0) fail(Errc::division_by_zero, "denominator r = 0");
    if (D <= 0) fail(Errc::invalid_radicand, "radicand D must be positive");
    if (q == 0) {
        D = 1;
    } else {
        auto [s, d] = squarefree_decompose(D);
        q *= s;
        D = d;
        if (D == 1) { // perfect-square radicand collapses to a rational
            p += q;
            q = 0;
        }
    }
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int g = gcd_int(gcd_int(abs_int(p), abs_int(q)), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    QuadNum v;
    v.p_ = std::move(p);
    v.q_ = std::move(q);
    v.r_ = std::move(r);
    v.d_ = std::move(D);
    return v;
}

Int QuadNum::join_radicand(const QuadNum& o) const {
    if (d_ == o.d_) return d_;
    if (q_ == 0) return o.d_;
    if (o.q_ == 0) return d_;
    fail(Errc::incompatible_fields,
         "mixed radicands sqrt(" + d_.str() + ") and sqrt(" + o.d_.str() + ")");
}

int QuadNum::sign() const {
    if (q_ == 0) return sgn(p_);
    if (p_ == 0) return sgn(q_);
    int sp = sgn(p_), sq = sgn(q_);
    if (sp == sq) return sp;
    // p and q*sqrt(D) compete; compare p^2 against q^2 D.
    Int lhs = p_ * p_, rhs = q_ * q_ * d_;
    if (lhs == rhs) return 0; // unreachable for square-free D > 1
    return lhs > rhs ? sp : sq;
}

QuadNum QuadNum::operator-() const {
    QuadNum v = *this;
    v.p_ = -v.p_;
    v.q_ = -v.q_;
    return v;
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
    Int D = join_radicand(o);
    return make(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, D);
}

QuadNum QuadNum::operator-(const QuadNum& o) const { return *this + (-o); }

QuadNum QuadNum::operator*(const QuadNum& o) const {
    Int D = join_radicand(o);
    return make(p_ * o.p_ + q_ * o.q_ * D, p_ * o.q_ + q_ * o.p_, r_ * o.r_, D);
}

QuadNum QuadNum::inverse() const {
    if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
    if (q_ == 0) return make(r_, 0, p_, 1);
    // r / (p + q sqrt(D)) = r (p - q sqrt(D)) / (p^2 - q^2 D)
    Int den = p_ * p_ - q_ * q_ * d_;
    return make(r_ * p_, -r_ * q_, den, d_);
}

QuadNum QuadNum::operator/(const QuadNum& o) const { return *this * o.inverse(); }

Ordering QuadNum::compare(const QuadNum& o) const {
    int s = (*this - o).sign();
    return s < 0 ? Ordering::less : (s > 0 ? Ordering::greater : Ordering::equal);
}

Int QuadNum::floor() const {
    // Bracket q*sqrt(D) between consecutive integers, then correct exactly.
    Int t = isqrt(q_ * q_ * d_);
    Int lo = (q_ >= 0) ? t : -t - 1;
    Int k = (p_ + lo) / r_ - 1;
    while (compare(rational(k + 1)) != Ordering::less) ++k;
    while (compare(rational(k)) == Ordering::less) --k;
    return k;
}

std::string QuadNum::str() const {
    std::string s;
    if (q_ == 0) {
        s = p_.str();
        if (r_ != 1) s += "/" + r_.str();
        return s;
    }
    s = "(" + p_.str();
    s += (q_ < 0) ? " - " : " + ";
    Int aq = abs_int(q_);
    if (aq != 1) s += aq.str() + "*";
    s += "sqrt(" + d_.str() + "))";
    if (r_ != 1) s += "/" + r_.str();
    return s;
}

std::string QuadNum::approx(int digits) const {
    int s = sign();
    if (s == 0) return "0";
    QuadNum a = s < 0 ? -*this : *this;

    // Scale by powers of ten until the integer part has `digits` digits,
    // taking exact floors throughout.
    Int ip = a.floor();
    int int_digits = static_cast<int>(ip.str().size());
    if (ip == 0) {
        // Leading zeros after the point count against nothing; find the
        // first significant digit by repeated scaling.
        int_digits = 0;
        QuadNum t = a;
        const QuadNum ten = of_int(10);
        while (t.floor() == 0) {
            t = t * ten;
            --int_digits;
        }
        int_digits += 1;
    }
    int shift = digits - int_digits;
    Int pow10 = 1;
    for (int i = 0; i < (shift > 0 ? shift : -shift); ++i) pow10 *= 10;

    Int scaled;
    if (shift >= 0) {
        scaled = (a * rational(pow10)).floor();
    } else {
        scaled = (a * rational(1, pow10)).floor();
    }
    std::string mant = scaled.str();
    // Place the decimal point `shift` positions from the right.
    std::string out;
    if (shift <= 0) {
        out = mant;
        for (int i = 0; i < -shift; ++i) out += "0";
    } else if (static_cast<int>(mant.size()) > shift) {
        out = mant.substr(0, mant.size() - shift) + "." + mant.substr(mant.size() - shift);
    } else {
        out = "0.";
        for (int i = 0; i < shift - static_cast<int>(mant.size()); ++i) out += "0";
        out += mant;
    }
    return (s < 0 ? "-" : "") + out;
}

std::size_t QuadNum::hash() const {
    std::size_t h = 0;
    boost::hash_combine(h, p_);
    boost::hash_combine(h, q_);
    boost::hash_combine(h, r_);
    boost::hash_combine(h, d_);
    return h;
}

QuadNum operator*(long long k, const QuadNum& v) { return QuadNum::of_int(k) * v; }

QuadNum qf_arith(const QuadNum& a, const QuadNum& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
        case ArithOp::neg: return -a;
        case ArithOp::inv: return a.inverse();
    }
    fail(Errc::parse_error, "unknown arithmetic op");
}

} // namespace agol3
