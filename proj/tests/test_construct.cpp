#include <catch2/catch_amalgamated.hpp>

#include "pmwd/construct.hpp"
#include "pmwd/enumerate.hpp"

using namespace pmwd;

TEST_CASE("pw: full rate and single-bit extremes") {
    auto full = construct_pw(4, 16);
    CHECK(full.info_set_A.size() == 16);
    CHECK(full.info_set_A.front() == 1);
    CHECK(full.info_set_A.back() == 16);

    // the all-ones digit string maximizes any monotone beta expansion
    auto single = construct_pw(5, 1);
    CHECK(single.info_set_A == std::vector<uint32_t>{32});
}

TEST_CASE("pw is deterministic") {
    for (int trial = 0; trial < 3; ++trial) {
        auto a = construct_pw(7, 43);
        auto b = construct_pw(7, 43);
        CHECK(a.info_set_A == b.info_set_A);
    }
}

TEST_CASE("pw reproduces the published rate-1/2 fixtures") {
    auto spec256 = construct_pw(8, 128);
    auto res256 = screm(spec256, min_weight_lower_bound(spec256), EnumMode::count);
    CHECK(res256.d_min == 8);
    CHECK(res256.a_dmin == 96);

    auto spec512 = construct_pw(9, 256);
    auto res512 = screm(spec512, min_weight_lower_bound(spec512), EnumMode::count);
    CHECK(res512.d_min == 8);
    CHECK(res512.a_dmin == 64);
}

TEST_CASE("ga: full rate, determinism and the all-ones subchannel") {
    auto full = construct_ga(4, 16, 2.0, 0.5);
    CHECK(full.info_set_A.size() == 16);

    for (double snr : {-2.0, 0.0, 1.5, 3.0, 6.0}) {
        auto a = construct_ga(6, 32, snr, 0.5);
        auto b = construct_ga(6, 32, snr, 0.5);
        CHECK(a.info_set_A == b.info_set_A);
        // index N rides the most reliable subchannel under any symmetric construction
        CHECK(a.info_set_A.back() == 64);
    }
}

TEST_CASE("ga respects the domination partial order") {
    for (double snr : {0.0, 2.5}) {
        auto spec = construct_ga(7, 64, snr, 0.5);
        std::vector<bool> member(spec.N + 1, false);
        for (uint32_t i : spec.info_set_A)
            member[i] = true;
        for (uint32_t i = 1; i <= spec.N; ++i) {
            if (!member[i])
                continue;
            for (int b = 0; b < spec.n; ++b) {
                const uint32_t super = ((i - 1) | (uint32_t(1) << b)) + 1;
                CHECK(member[super]);
            }
        }
    }
}

TEST_CASE("ga reproduces the published rate-1/2 rows at the 3 dB design point") {
    struct Row {
        int n;
        uint32_t k;
        uint64_t d, a;
    };
    const Row rows[] = {{8, 128, 8, 32},
                        {9, 256, 16, 52832},
                        {10, 512, 16, 20672},
                        {11, 1024, 16, 896}};
    for (const Row& row : rows) {
        auto spec = construct_ga(row.n, row.k, 3.0, 0.5);
        auto result = screm(spec, min_weight_lower_bound(spec), EnumMode::count);
        CHECK(result.d_min == row.d);
        CHECK(result.a_dmin == row.a);
    }
}

TEST_CASE("ga rejects bad arguments") {
    CHECK_THROWS_AS(construct_ga(4, 0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(construct_ga(4, 8, std::nan(""), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(construct_ga(4, 8, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("pw info sets are domination closed at every length") {
    for (int n = 2; n <= 9; ++n) {
        const uint32_t big_n = uint32_t(1) << n;
        auto spec = construct_pw(n, big_n / 2);
        std::vector<bool> member(big_n + 1, false);
        for (uint32_t i : spec.info_set_A)
            member[i] = true;
        for (uint32_t i = 1; i <= big_n; ++i) {
            if (!member[i])
                continue;
            for (int b = 0; b < n; ++b) {
                const uint32_t super = ((i - 1) | (uint32_t(1) << b)) + 1;
                CHECK(member[super]);
            }
        }
    }
}
