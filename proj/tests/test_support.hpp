// Shared helpers for the test suites: explicit generator matrices, RM
// information sets, closed-form RM shell counts and random
// reliability-consistent (domination-closed) information sets. Everything
// here is reference-path machinery, independent of the search code.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pmwd/bitvec.hpp"
#include "pmwd/polar.hpp"

namespace testsupport {

// F^{(x)n} built literally by Kronecker products of [[1,0],[1,1]].
inline std::vector<std::vector<uint8_t>> kronecker_f(int n) {
    std::vector<std::vector<uint8_t>> g{{1}};
    for (int stage = 0; stage < n; ++stage) {
        const size_t m = g.size();
        std::vector<std::vector<uint8_t>> next(2 * m, std::vector<uint8_t>(2 * m, 0));
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) {
                if (!g[r][c])
                    continue;
                next[r][c] = 1;
                next[r + m][c] = 1;
                next[r + m][c + m] = 1;
            }
        g = std::move(next);
    }
    return g;
}

// RM(r, m) as a polar information set: rows of F^{(x)m} with popcount
// (i-1) >= m - r. Membership depends only on the popcount, so the set is
// identical in the u and v domains.
inline std::vector<uint32_t> rm_info_set(int r, int m) {
    std::vector<uint32_t> set;
    const uint32_t big_n = uint32_t(1) << m;
    for (uint32_t i = 1; i <= big_n; ++i)
        if (std::popcount(i - 1) >= m - r)
            set.push_back(i);
    return set;
}

// Gaussian binomial [m choose r]_2.
inline uint64_t gaussian_binomial(int m, int r) {
    if (r < 0 || r > m)
        return 0;
    unsigned __int128 num = 1, den = 1;
    for (int t = 0; t < r; ++t) {
        num *= (uint64_t(1) << (m - t)) - 1;
        den *= (uint64_t(1) << (r - t)) - 1;
    }
    return uint64_t(num / den);
}

// Number of minimum-weight codewords of RM(r, m): the weight-2^{m-r}
// codewords are indicators of (m-r)-dimensional affine flats, giving
// 2^r * [m choose r]_2 of them.
inline uint64_t rm_min_weight_count(int r, int m) {
    return (uint64_t(1) << r) * gaussian_binomial(m, r);
}

// Random reliability-consistent information set: score every subchannel by
// a random positive weight per binary digit; a digit-dominating index then
// always scores strictly higher, so the top-K set is domination closed.
inline pmwd::CodeSpec random_monotone_spec(int n, uint32_t k, std::mt19937& rng) {
    std::uniform_real_distribution<double> positive(0.1, 2.0);
    std::vector<double> digit_score(n);
    for (double& s : digit_score)
        s = positive(rng);
    const uint32_t big_n = uint32_t(1) << n;
    std::vector<std::pair<double, uint32_t>> scored(big_n);
    for (uint32_t i = 0; i < big_n; ++i) {
        double score = 0.0;
        for (int b = 0; b < n; ++b)
            if ((i >> b) & 1u)
                score += digit_score[b];
        scored[i] = {score, i + 1};
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second > b.second;
    });
    std::vector<uint32_t> info;
    for (uint32_t t = 0; t < k; ++t)
        info.push_back(scored[t].second);
    return pmwd::CodeSpec::from_info_set_A(n, std::move(info));
}

inline std::set<pmwd::BitVec> as_set(const std::vector<pmwd::BitVec>& codewords) {
    return {codewords.begin(), codewords.end()};
}

} // namespace testsupport
