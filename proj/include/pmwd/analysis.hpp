// Performance bounds (Q, union bound, AUB), closed-form SCL visited-node
// formulas, and the exhaustive CRC-polynomial search.

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmwd/concat.hpp"
#include "pmwd/polar.hpp"

namespace pmwd {

// Gaussian tail probability Q(x) = P(Z > x) for Z ~ N(0,1).
inline double q_function(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("q_function: x must be finite");
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

struct BoundPoint {
    double eb_n0_db = 0.0;
    double value = 0.0;
};

// Approximate union bound: the minimum-weight term A_dmin Q(sqrt(2 d R Eb/N0)).
inline BoundPoint aub(uint64_t d_min, uint64_t a_dmin, double rate, double eb_n0_db) {
    if (d_min < 1 || a_dmin < 1)
        throw std::invalid_argument("aub: d_min and a_dmin must be positive");
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("aub: rate must be in (0, 1]");
    const double eb_n0 = std::pow(10.0, eb_n0_db / 10.0);
    const double q = q_function(std::sqrt(2.0 * double(d_min) * rate * eb_n0));
    return {eb_n0_db, double(a_dmin) * q};
}

// Full union bound over a (weight, multiplicity) spectrum.
inline BoundPoint union_bound(const std::vector<std::pair<uint64_t, uint64_t>>& spectrum,
                              double rate, double eb_n0_db) {
    if (spectrum.empty())
        throw std::invalid_argument("union_bound: empty spectrum");
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("union_bound: rate must be in (0, 1]");
    std::vector<uint64_t> weights;
    for (const auto& [d, a] : spectrum)
        weights.push_back(d);
    std::sort(weights.begin(), weights.end());
    if (std::adjacent_find(weights.begin(), weights.end()) != weights.end())
        throw std::invalid_argument("union_bound: duplicate weight in spectrum");
    const double eb_n0 = std::pow(10.0, eb_n0_db / 10.0);
    double total = 0.0;
    for (const auto& [d, a] : spectrum)
        total += double(a) * q_function(std::sqrt(2.0 * double(d) * rate * eb_n0));
    return {eb_n0_db, total};
}

// min(2^K N log2 N, M L N log2 N): the SCL / multi-level SCL visited-node
// formulas. M = 1 gives the plain SCL variant.
inline uint64_t scl_avn(uint32_t k, uint64_t big_n, uint64_t list_size, uint64_t levels) {
    if (big_n < 2 || (big_n & (big_n - 1)) != 0)
        throw std::invalid_argument("scl_avn: N must be a power of two, at least 2");
    if (list_size < 1 || levels < 1)
        throw std::invalid_argument("scl_avn: L and M must be positive");
    const unsigned log2_n = 63 - std::countl_zero(big_n);

    using u128 = unsigned __int128;
    const u128 per_path = u128(big_n) * log2_n;
    const u128 limit = ~u128(0);

    auto saturating_mul = [&](u128 a, u128 b) -> u128 {
        if (a != 0 && b > limit / a)
            return limit;
        return a * b;
    };

    u128 exhaustive = limit;
    if (k < 100)
        exhaustive = saturating_mul(u128(1) << k, per_path);
    const u128 listed = saturating_mul(saturating_mul(u128(levels), u128(list_size)), per_path);
    const u128 result = std::min(exhaustive, listed);
    if (result > u128(std::numeric_limits<uint64_t>::max()))
        throw std::overflow_error("scl_avn: result does not fit in 64 bits");
    return uint64_t(result);
}

// One evaluated CRC candidate. ok = false records a propagated pc_scem
// failure; such candidates are excluded from the ranking.
struct CrcCandidate {
    CrcPolynomial poly;
    uint64_t d_min = 0;
    uint64_t a_dmin = 0;
    bool ok = false;
    std::string error;
};

// Ranked by (-d_min, a_dmin), ties to the smaller polynomial value.
struct CrcSearchReport {
    std::vector<CrcCandidate> ranked;
    std::vector<CrcCandidate> failed;
    const CrcCandidate& winner() const {
        if (ranked.empty())
            throw std::runtime_error("CrcSearchReport: no successful candidate");
        return ranked.front();
    }
};

// Exhausts the 2^{K_P - 1} degree-K_P polynomials with leading and constant
// coefficient 1, running pc_scem on each.
inline CrcSearchReport crc_optimize(const CodeSpec& inner, uint32_t k_i, int k_p,
                                    std::vector<uint32_t> mapping = {},
                                    unsigned threads = 1) {
    if (k_p < 1 || k_p > 16)
        throw std::invalid_argument("crc_optimize: K_P must be in 1..16");
    if (k_i + uint32_t(k_p) != inner.K)
        throw std::invalid_argument("crc_optimize: K_I + K_P must equal the inner K");

    const uint64_t candidates = uint64_t(1) << (k_p - 1);
    auto evaluate = [&](uint64_t index) {
        CrcCandidate candidate;
        candidate.poly = CrcPolynomial::from_bits((uint64_t(1) << k_p) | (index << 1) | 1u);
        try {
            const ConcatSpec concat = make_concat(inner, candidate.poly, mapping);
            const MwdResult mwd = pc_scem(concat, EnumMode::count);
            candidate.d_min = mwd.d_min;
            candidate.a_dmin = mwd.a_dmin;
            candidate.ok = true;
        } catch (const std::exception& e) {
            candidate.error = e.what();
        }
        return candidate;
    };

    std::vector<CrcCandidate> results(candidates);
    if (threads <= 1) {
        for (uint64_t i = 0; i < candidates; ++i)
            results[i] = evaluate(i);
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<uint64_t> cursor{0};
        for (unsigned t = 0; t < threads; ++t)
            workers.push_back(std::async(std::launch::async, [&] {
                for (;;) {
                    const uint64_t i = cursor.fetch_add(1);
                    if (i >= candidates)
                        return;
                    results[i] = evaluate(i);
                }
            }));
        for (auto& worker : workers)
            worker.get();
    }

    CrcSearchReport report;
    for (CrcCandidate& candidate : results)
        (candidate.ok ? report.ranked : report.failed).push_back(std::move(candidate));
    std::sort(report.ranked.begin(), report.ranked.end(),
              [](const CrcCandidate& a, const CrcCandidate& b) {
                  if (a.d_min != b.d_min)
                      return a.d_min > b.d_min;
                  if (a.a_dmin != b.a_dmin)
                      return a.a_dmin < b.a_dmin;
                  return a.poly.coefficients < b.poly.coefficients;
              });
    return report;
}

} // namespace pmwd
