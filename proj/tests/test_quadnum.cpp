#include <doctest.h>

#include <random>

#include "agol3/quadnum.hpp"

using namespace agol3;

namespace {

QuadNum qn(long long p, long long q, long long r, long long D) {
    return QuadNum::make(p, q, r, D);
}

// Uniform random element of Q(sqrt(D)) with small coordinates, nonzero
// when nz is set.
QuadNum random_quad(std::mt19937_64& rng, long long D, bool nz = false) {
    std::uniform_int_distribution<long long> coef(-9, 9), den(1, 9);
    for (;;) {
        QuadNum v = qn(coef(rng), coef(rng), den(rng), D);
        if (!nz || !v.is_zero()) return v;
    }
}

} // namespace

TEST_CASE("canonical form") {
    QuadNum alpha = qn(19, -1, 14, 221);
    CHECK(alpha.p() == 19);
    CHECK(alpha.q() == -1);
    CHECK(alpha.r() == 14);
    CHECK(alpha.D() == 221);
    CHECK(alpha.str() == "(19 - sqrt(221))/14");

    // sign and gcd normalization, rational collapse
    QuadNum minus_one = qn(2, 0, -2, 7);
    CHECK(minus_one == QuadNum::of_int(-1));
    CHECK(minus_one.D() == 1);

    // square part of the radicand folds into q: 3 sqrt(8) = 6 sqrt(2)
    QuadNum v = qn(0, 3, 1, 8);
    CHECK(v.q() == 6);
    CHECK(v.D() == 2);

    // perfect-square radicand collapses to a rational
    CHECK(qn(1, 2, 3, 9) == QuadNum::rational(7, 3));

    CHECK_THROWS_AS(qn(1, 1, 0, 2), Error);
    CHECK_THROWS_AS(qn(1, 1, 1, -5), Error);
}

TEST_CASE("exact comparison") {
    QuadNum alpha = qn(19, -1, 14, 221);
    CHECK(alpha.compare(QuadNum::rational(2, 7)) == Ordering::greater); // 15^2 > 221
    CHECK(alpha.compare(alpha) == Ordering::equal);
    CHECK(qn(37, 1, 82, 221).compare(QuadNum::of_int(1)) == Ordering::less); // sqrt(221) < 45

    // mixing two irrational radicands is a caller error
    CHECK_THROWS_AS((void)qn(0, 1, 1, 2).compare(qn(0, 1, 1, 3)), Error);
    // a rational side is comparable with any field
    CHECK(QuadNum::rational(3, 2).compare(qn(0, 1, 1, 2)) == Ordering::greater);
}

TEST_CASE("floor") {
    CHECK(qn(19, 1, 10, 221).floor() == 3); // 1/alpha for the (19 - sqrt(221))/14 ratio
    CHECK(QuadNum::of_int(5).floor() == 5);
    CHECK(qn(1, 1, 1, 2).floor() == 2);
    CHECK(qn(-1, -1, 1, 2).floor() == -3);
    CHECK(QuadNum::rational(-7, 2).floor() == -4);
}

TEST_CASE("arithmetic") {
    QuadNum alpha = qn(19, -1, 14, 221);
    CHECK(alpha.inverse() == qn(19, 1, 10, 221));
    CHECK((alpha + (-alpha)).is_zero());
    CHECK(qn(15, 1, 2, 221) * qn(15, -1, 2, 221) == QuadNum::of_int(1)); // lambda * lambda^-1
    CHECK_THROWS_AS(QuadNum().inverse(), Error);

    CHECK(qf_arith(alpha, alpha, ArithOp::sub).is_zero());
    CHECK(qf_arith(alpha, QuadNum(), ArithOp::neg) == -alpha);
    CHECK(qf_arith(alpha, QuadNum(), ArithOp::inv) == alpha.inverse());
}

TEST_CASE("display approximations truncate to significant digits") {
    CHECK(qn(37, 1, 82, 221).approx() == "0.6325130335");
    CHECK(qn(19, -1, 14, 221).approx(4) == "0.2952");
    CHECK(qn(15, 1, 2, 221).approx(10) == "14.93303437");
    CHECK(QuadNum::of_int(-3).approx(3) == "-3.00");
    CHECK(QuadNum().approx() == "0");
}

TEST_CASE("trichotomy and transitivity on random same-field triples") {
    std::mt19937_64 rng(0x5eed);
    for (long long D : {221LL, 5LL}) {
        for (int i = 0; i < 200; ++i) {
            QuadNum a = random_quad(rng, D), b = random_quad(rng, D), c = random_quad(rng, D);
            Ordering ab = a.compare(b), ba = b.compare(a);
            CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
            if (ab == Ordering::less && b.compare(c) == Ordering::less)
                CHECK(a.compare(c) == Ordering::less);
            if (ab == Ordering::equal) CHECK(a == b);
        }
    }
}

TEST_CASE("floor brackets the value") {
    std::mt19937_64 rng(0xf100d);
    for (int i = 0; i < 300; ++i) {
        QuadNum a = random_quad(rng, 221);
        Int k = a.floor();
        CHECK(QuadNum::rational(k).compare(a) != Ordering::greater);
        CHECK(a.compare(QuadNum::rational(k + 1)) == Ordering::less);
    }
}

TEST_CASE("field axioms spot checks") {
    std::mt19937_64 rng(0xab5);
    for (long long D : {221LL, 5LL}) {
        for (int i = 0; i < 100; ++i) {
            QuadNum a = random_quad(rng, D), b = random_quad(rng, D), c = random_quad(rng, D);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            QuadNum nz = random_quad(rng, D, true);
            CHECK(nz * nz.inverse() == QuadNum::of_int(1));
        }
    }
}

TEST_CASE("round trip through the raw fields") {
    std::mt19937_64 rng(0x0c7);
    for (int i = 0; i < 200; ++i) {
        QuadNum a = random_quad(rng, 221);
        CHECK(QuadNum::make(a.p(), a.q(), a.r(), a.D()) == a);
    }
}
