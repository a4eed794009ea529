#include <doctest.h>

#include <random>

#include "agol3/braid.hpp"

using namespace agol3;

TEST_CASE("parsing the word grammar") {
    BraidWord beta = braid_parse("s1^4 s2 s1^3 s2^4");
    CHECK(beta.syllables() == std::vector<Syllable>{{1, 4}, {2, 1}, {1, 3}, {2, 4}});

    CHECK(braid_parse("s1 s1^-1").empty()); // cancellation within one syllable

    BraidWord bp = braid_parse("s1^-4 s2^-4 s1^-3 s2^-1");
    CHECK(bp.syllables() == std::vector<Syllable>{{1, -4}, {2, -4}, {1, -3}, {2, -1}});

    CHECK(braid_parse("s1^2 s1^3").syllables() == std::vector<Syllable>{{1, 5}});
    CHECK(braid_parse("").empty());

    CHECK_THROWS_WITH_AS(braid_parse("s3"), doctest::Contains("position"), Error);
    CHECK_THROWS_AS(braid_parse("s1^0"), Error);
    CHECK_THROWS_AS(braid_parse("x1"), Error);
    CHECK_THROWS_AS(braid_parse("s1^"), Error);
    CHECK_THROWS_AS(braid_parse("s1^2x"), Error);
}

TEST_CASE("word transforms") {
    BraidWord w = braid_parse("s1^4 s2 s1^3 s2^4");
    CHECK(mirror(w) == braid_parse("s1^-4 s2^-1 s1^-3 s2^-4"));

    BraidWord v = braid_parse("s1^-4 s2^-1 s1^3 s2^-4");
    CHECK(reverse(v) == braid_parse("s2^-4 s1^3 s2^-1 s1^-4"));

    CHECK(cyclic_shift(braid_parse("s1^4 s2"), 1) == braid_parse("s2 s1^4"));
    CHECK(inverse(w) == braid_parse("s2^-4 s1^-3 s2^-1 s1^-4"));
}

TEST_CASE("transform involutions") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> len(1, 8), ex(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Syllable> syl;
        int g = 1 + (trial % 2);
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int e = ex(rng);
            if (e == 0) e = 1;
            syl.push_back({g, e});
            g = 3 - g;
        }
        BraidWord w{syl};
        CHECK(mirror(mirror(w)) == w);
        CHECK(reverse(reverse(w)) == w);
        CHECK(inverse(inverse(w)) == w);
    }
}

TEST_CASE("flype form extraction and the move") {
    FlypeForm f = extract_flype_form(braid_parse("s1^4 s2^-1 s1^3 s2^4"));
    CHECK(f == FlypeForm{4, -1, 3, 4});
    CHECK(flype(f) == FlypeForm{4, 4, 3, -1});
    CHECK(flype_form_word(flype(f)) == braid_parse("s1^4 s2^4 s1^3 s2^-1"));
    CHECK(flype(flype(f)) == f);

    // z = eps case: swapping equal exponents is the identity
    FlypeForm g = extract_flype_form(braid_parse("s1^2 s2^-1 s1^3 s2^-1"));
    CHECK(flype(g) == g);

    // rotation brings the +-1 exponent into the eps slot
    FlypeForm h = extract_flype_form(braid_parse("s1^3 s2^4 s1^4 s2^-1"));
    CHECK(h == FlypeForm{4, -1, 3, 4});

    // sigma2-first words rotate to the sigma1-first shape
    FlypeForm r = extract_flype_form(braid_parse("s2^-1 s1^3 s2^4 s1^4"));
    CHECK(r == FlypeForm{4, -1, 3, 4});

    CHECK_THROWS_AS(extract_flype_form(braid_parse("s1 s2 s1 s2 s1")), Error);
    CHECK_THROWS_AS(extract_flype_form(braid_parse("s1^2 s2^3 s1^2 s2^3")), Error);
}

TEST_CASE("Ko-Lee non-degeneracy") {
    CHECK_FALSE(kolee_nondegenerate({4, -1, 3, 4})); // y = z + eps
    CHECK_FALSE(kolee_nondegenerate({5, -1, 3, 4})); // y = z + eps as well
    CHECK_FALSE(kolee_nondegenerate({4, -1, 4, 4})); // x = y
    CHECK(kolee_nondegenerate({-4, -1, -3, -4}));
    CHECK(kolee_nondegenerate({4, -1, 6, 2}));
    CHECK_FALSE(kolee_nondegenerate({4, -1, 6, 1}));  // |z| < 2
    CHECK_FALSE(kolee_nondegenerate({-2, -1, 5, 3})); // x = 2 eps
    CHECK_FALSE(kolee_nondegenerate({4, 1, 1, 3}));   // y = eps
    CHECK(kolee_nondegenerate({5, 1, 4, 2}));         // eps = +1
    CHECK_THROWS_AS(kolee_nondegenerate({4, 2, 3, 4}), Error);
}

TEST_CASE("Ko-Lee is invariant under the x/y swap with reverse") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> ex(-6, 6);
    for (int i = 0; i < 300; ++i) {
        long long x = ex(rng), y = ex(rng), z = ex(rng);
        if (x == 0 || y == 0 || z == 0) continue;
        for (long long eps : {-1LL, 1LL}) {
            // reading the reversed word cyclically swaps the roles of x and y
            CHECK(kolee_nondegenerate({x, eps, y, z}) == kolee_nondegenerate({y, eps, x, z}));
        }
    }
}
