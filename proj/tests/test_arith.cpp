#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/oracles.hpp"
#include "tdesign/arith.hpp"
#include "tdesign/params.hpp"

using namespace tdesign;
namespace ts = testsupport;

TEST_CASE("binom matches the factorial route and known constants") {
    CHECK(binom(18, 5) == 8568);
    CHECK(binom(31, 5) == 169911);  // 31*30*29*28*27/120
    CHECK(binom(46, 23) == Int("8233430727600"));
    for (int n = 0; n <= 40; ++n) CHECK(binom(n, 0) == 1);
    CHECK(binom(5, 7) == 0);
    CHECK(binom(3, -1) == 0);
    for (int n = 0; n <= 34; ++n)
        for (int r = 0; r <= n; ++r) CHECK(binom(n, r) == ts::binom_oracle(n, r));
}

TEST_CASE("binom satisfies the Pascal recurrence on a randomized grid") {
    std::mt19937 rng(411);
    std::uniform_int_distribution<int> npick(1, 60);
    for (int it = 0; it < 300; ++it) {
        int n = npick(rng);
        std::uniform_int_distribution<int> rpick(1, n);
        int r = rpick(rng);
        CHECK(binom(n, r) == binom(n - 1, r - 1) + binom(n - 1, r));
    }
}

TEST_CASE("lambda_s: paper coefficients and oracle-confirmed values") {
    // s = t gives lambda itself
    CHECK(lambda_s(DesignParams{5, 18, 9, Int(35)}, 5) == Rat(35));
    // the 14/5 coefficient in L_{1,4}: lambda_4 of a 5-(18,9,lambda) design
    CHECK(lambda_s(DesignParams{5, 18, 9, Int(1)}, 4) == Rat(14, 5));
    CHECK(lambda_s(DesignParams{5, 18, 9, Int(5)}, 4) == Rat(14));
    // frozen from the independent factorial oracle: 2*C(18,5)/C(8,5) = 306
    CHECK(ts::lambda_s_oracle(5, 18, 8, Int(2), 0) == Rat(306));
    CHECK(lambda_s(DesignParams{5, 18, 8, Int(2)}, 0) == Rat(306));
    CHECK_THROWS_AS(lambda_s(DesignParams{5, 18, 8, Int(2)}, 6), std::domain_error);
}

TEST_CASE("lambda_s is monotone non-increasing in s and integral at lambda_min") {
    for (int t = 2; t <= 4; ++t)
        for (int v = 6; v <= 14; ++v)
            for (int k = t + 1; k <= std::min(v / 2 + 1, 8); ++k) {
                DesignParams p{t, v, k, lambda_min(t, k, v)};
                Rat prev = lambda_s(p, 0);
                for (int s = 0; s <= t; ++s) {
                    Rat cur = lambda_s(p, s);
                    CHECK(is_integer(cur));
                    CHECK(cur <= prev);
                    prev = cur;
                }
            }
}

TEST_CASE("lambda_min: paper values and brute-force oracle") {
    CHECK(lambda_min(5, 10, 36) == 63);
    CHECK(lambda_min(5, 7, 18) == 6);
    CHECK(lambda_min(3, 3, 9) == 1);   // k = t
    CHECK(lambda_min(4, 4, 11) == 1);  // k = t
    for (int t = 2; t <= 3; ++t)
        for (int v = 5; v <= 12; ++v)
            for (int k = t; k <= std::min(v, 6); ++k)
                CHECK(lambda_min(t, k, v) == ts::lambda_min_oracle(t, k, v));
    CHECK_THROWS_AS(lambda_min(5, 4, 10), std::domain_error);
}

TEST_CASE("lambda_max and lim_bound") {
    CHECK(lambda_max(5, 6, 18) == 13);
    CHECK(lambda_max(5, 10, 18) == 1287);  // C(13,5); m = 1..143 at lambda_min = 9
    CHECK(lambda_max(4, 4, 9) == 1);
    CHECK(lim_bound(5, 10, 36) == 1348);
    CHECK(lim_bound(5, 12, 36) == 87652);
    // frozen from the oracle: floor(C(31,4) / (2*35)) = floor(31465/70)
    CHECK(ts::binom_oracle(31, 4) == 31465);
    CHECK(lim_bound(4, 8, 35) == 449);
    CHECK(lim_bound(2, 2, 2) == 0);  // lambda_max = lambda_min = 1
}

TEST_CASE("lambda_min divides lambda_max") {
    for (int t = 2; t <= 5; ++t)
        for (int v = t + 2; v <= 20; ++v)
            for (int k = t + 1; k <= v; ++k)
                CHECK(lambda_max(t, k, v) % lambda_min(t, k, v) == 0);
}

TEST_CASE("complement_lambda: paper map and involution") {
    for (Int m = 1; m <= 3; ++m) {
        DesignParams c = complement_lambda(DesignParams{5, 18, 8, 2 * m});
        CHECK(c.k == 10);
        CHECK(c.lambda == 9 * m);
    }
    DesignParams fano = complement_lambda(DesignParams{2, 7, 3, Int(1)});
    CHECK(fano.k == 4);
    CHECK(fano.lambda == 2);
    // involution across a grid
    for (int t = 2; t <= 3; ++t)
        for (int v = 6; v <= 12; ++v)
            for (int k = t; k <= v - t; ++k) {
                DesignParams p{t, v, k, lambda_min(t, k, v)};
                DesignParams back = complement_lambda(complement_lambda(p));
                CHECK(back.k == p.k);
                CHECK(back.lambda == p.lambda);
            }
    // lambda* must be integral: 1 * C(5,2)/C(3,2) = 10/3
    CHECK_THROWS_AS(complement_lambda(DesignParams{2, 8, 3, Int(1)}), std::domain_error);
}

TEST_CASE("supplement_lambda") {
    CHECK(supplement_lambda(DesignParams{5, 18, 6, Int(4)}).lambda == 9);
    CHECK(supplement_lambda(DesignParams{5, 18, 6, Int(13)}).lambda == 0);
    CHECK(supplement_lambda(DesignParams{2, 7, 3, Int(1)}).lambda == 4);
    CHECK_THROWS_AS(supplement_lambda(DesignParams{5, 18, 6, Int(14)}), std::domain_error);
    // involution
    for (int t = 2; t <= 3; ++t)
        for (int v = 6; v <= 10; ++v)
            for (int k = t + 1; k <= v; ++k) {
                DesignParams p{t, v, k, lambda_min(t, k, v)};
                CHECK(supplement_lambda(supplement_lambda(p)).lambda == p.lambda);
            }
}

TEST_CASE("ingredient slot families used throughout the 5-(36,k) section") {
    // 5-(18,i): lambda_min in {1,6,2,5,9}, m ranges {13,13,143,143,143}
    const int want_lmin[5] = {1, 6, 2, 5, 9};
    const int want_mmax[5] = {13, 13, 143, 143, 143};
    for (int i = 6; i <= 10; ++i) {
        CHECK(lambda_min(5, i, 18) == want_lmin[i - 6]);
        CHECK(lambda_max(5, i, 18) / lambda_min(5, i, 18) == want_mmax[i - 6]);
    }
}
