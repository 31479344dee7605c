#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "pmwd/analysis.hpp"
#include "pmwd/construct.hpp"

using namespace pmwd;

TEST_CASE("q_function reference points") {
    CHECK(q_function(0.0) == Catch::Approx(0.5).epsilon(1e-14));
    CHECK(q_function(3.0) == Catch::Approx(1.3498980e-3).epsilon(1e-7));
    for (double x : {0.25, 0.5, 1.0, 2.0, 4.5, 7.0}) {
        CHECK(q_function(x) + q_function(-x) == Catch::Approx(1.0).epsilon(1e-14));
        CHECK(q_function(x) < q_function(x - 1e-3)); // strictly decreasing
        CHECK(q_function(x) > 0.0);
        CHECK(q_function(x) < 1.0);
    }
    CHECK_THROWS_AS(q_function(std::nan("")), std::invalid_argument);
}

TEST_CASE("aub basics") {
    // vanishing argument pushes Q to 1/2
    auto tiny = aub(1, 1, 1e-12, -300.0);
    CHECK(tiny.value == Catch::Approx(0.5).epsilon(1e-6));

    auto once = aub(8, 96, 0.5, 4.0);
    auto twice = aub(8, 192, 0.5, 4.0);
    CHECK(twice.value == Catch::Approx(2.0 * once.value).epsilon(1e-14));

    const double expected = 96.0 * q_function(std::sqrt(8.0 * std::pow(10.0, 0.4)));
    CHECK(once.value == Catch::Approx(expected).epsilon(1e-14));
    CHECK(once.eb_n0_db == 4.0);

    CHECK_THROWS_AS(aub(0, 1, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(aub(4, 1, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("aub is nonincreasing in Eb/N0 for fixed parameters") {
    double previous = std::numeric_limits<double>::infinity();
    for (double db = -5.0; db <= 10.0; db += 0.25) {
        const double value = aub(8, 96, 0.5, db).value;
        CHECK(value <= previous);
        previous = value;
    }
}

TEST_CASE("union bound composes aub terms") {
    auto single = union_bound({{8, 96}}, 0.5, 3.0);
    CHECK(single.value == aub(8, 96, 0.5, 3.0).value);

    // zero-multiplicity tail terms contribute nothing
    auto padded = union_bound({{8, 96}, {12, 0}, {16, 0}}, 0.5, 3.0);
    CHECK(padded.value == single.value);

    // at high SNR the minimum-weight term dominates
    auto two_term = union_bound({{8, 96}, {16, 10000}}, 0.5, 10.0);
    auto head = aub(8, 96, 0.5, 10.0);
    CHECK(two_term.value / head.value == Catch::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS(union_bound({}, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(union_bound({{8, 1}, {8, 2}}, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("scl_avn selects the min branch") {
    // list branch: 1280000 * 128 * 7
    CHECK(scl_avn(64, 128, 1280000, 1) == 1146880000ull);
    // exhaustive branch when 2^K is the smaller side
    CHECK(scl_avn(4, 16, 1024, 4) == (uint64_t(1) << 4) * 16 * 4);
    // M = 1 gives the plain SCL formula
    CHECK(scl_avn(10, 64, 100, 1) == 100ull * 64 * 6);
    CHECK_THROWS_AS(scl_avn(4, 100, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(scl_avn(4, 16, 0, 1), std::invalid_argument);
}

TEST_CASE("scl_avn is monotone in each argument") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const uint32_t k = 1 + rng() % 40;
        const uint64_t n = uint64_t(1) << (1 + rng() % 12);
        const uint64_t l = 1 + rng() % 100000;
        const uint64_t m = 1 + rng() % 16;
        const uint64_t base = scl_avn(k, n, l, m);
        CHECK(scl_avn(k + 1, n, l, m) >= base);
        CHECK(scl_avn(k, 2 * n, l, m) >= base);
        CHECK(scl_avn(k, n, l + 1, m) >= base);
        CHECK(scl_avn(k, n, l, m + 1) >= base);
    }
}

TEST_CASE("crc_optimize with K_P = 1 has the single candidate x + 1") {
    auto inner = construct_pw(4, 9);
    auto report = crc_optimize(inner, 8, 1);
    REQUIRE(report.ranked.size() == 1);
    CHECK(report.failed.empty());
    CHECK(report.winner().poly == CrcPolynomial::parse_hex("0x3"));
}

TEST_CASE("crc_optimize covers the candidate space and the winner dominates") {
    auto inner = construct_pw(4, 10);
    auto report = crc_optimize(inner, 6, 4);
    CHECK(report.ranked.size() + report.failed.size() == 8); // 2^{K_P - 1}
    std::set<uint64_t> seen;
    for (const auto& candidate : report.ranked) {
        CHECK(candidate.poly.degree == 4);
        CHECK(candidate.poly.constant_term());
        seen.insert(candidate.poly.coefficients);
    }
    CHECK(seen.size() == report.ranked.size());
    const auto& winner = report.winner();
    for (const auto& candidate : report.ranked) {
        const bool better = candidate.d_min > winner.d_min ||
                            (candidate.d_min == winner.d_min &&
                             candidate.a_dmin < winner.a_dmin);
        CHECK_FALSE(better);
    }
}

TEST_CASE("crc_optimize is schedule independent") {
    auto inner = construct_pw(4, 10);
    auto sequential = crc_optimize(inner, 7, 3, {}, 1);
    auto parallel = crc_optimize(inner, 7, 3, {}, 3);
    REQUIRE(sequential.ranked.size() == parallel.ranked.size());
    for (size_t i = 0; i < sequential.ranked.size(); ++i) {
        CHECK(sequential.ranked[i].poly == parallel.ranked[i].poly);
        CHECK(sequential.ranked[i].d_min == parallel.ranked[i].d_min);
        CHECK(sequential.ranked[i].a_dmin == parallel.ranked[i].a_dmin);
    }
}

TEST_CASE("crc_optimize guards the search-space size") {
    auto inner = construct_pw(5, 24);
    CHECK_THROWS_AS(crc_optimize(inner, 4, 20), std::invalid_argument);
    CHECK_THROWS_AS(crc_optimize(inner, 10, 6), std::invalid_argument); // K mismatch
}
