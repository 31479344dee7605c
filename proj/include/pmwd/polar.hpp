// Polar code construction primitives: information sets, bit reversal,
// generator row weights, butterfly encoding and the Plotkin split.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pmwd/bitvec.hpp"

namespace pmwd {

// Reverses the n-bit binary representation of i (0-based index domain).
inline uint32_t bit_reversal(uint32_t i, int n) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("bit_reversal: n out of range");
    if (i >= (uint32_t(1) << n))
        throw std::invalid_argument("bit_reversal: index out of range");
    uint32_t out = 0;
    for (int b = 0; b < n; ++b)
        out |= ((i >> b) & 1u) << (n - 1 - b);
    return out;
}

// Weight of row i (1-based) of F^{(x)n} without materializing the matrix:
// 2^{popcount(i-1)}.
inline uint64_t generator_row_weight(uint64_t i, int n) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("generator_row_weight: n out of range");
    if (i < 1 || i > (uint64_t(1) << n))
        throw std::invalid_argument("generator_row_weight: row index out of range");
    return uint64_t(1) << std::popcount(i - 1);
}

// An (N, K) polar code. info_set_A lives in the subchannel (u) domain,
// info_set_B in the v domain; B = { pi(i-1)+1 : i in A }. Both 1-based,
// ascending. K = 0 denotes the degenerate zero code (valid as a Plotkin
// component).
struct CodeSpec {
    int n = 0;
    uint32_t N = 0;
    uint32_t K = 0;
    std::vector<uint32_t> info_set_A;
    std::vector<uint32_t> info_set_B;
    std::vector<uint8_t> info_mask; // size N, 0-based v domain

    static CodeSpec from_info_set_A(int n, std::vector<uint32_t> a) {
        CodeSpec spec = base(n, a);
        spec.info_set_A = std::move(a);
        spec.info_set_B.reserve(spec.info_set_A.size());
        for (uint32_t i : spec.info_set_A)
            spec.info_set_B.push_back(bit_reversal(i - 1, n) + 1);
        std::sort(spec.info_set_B.begin(), spec.info_set_B.end());
        spec.finish();
        return spec;
    }

    static CodeSpec from_info_set_B(int n, std::vector<uint32_t> b) {
        CodeSpec spec = base(n, b);
        spec.info_set_B = std::move(b);
        spec.info_set_A.reserve(spec.info_set_B.size());
        for (uint32_t j : spec.info_set_B)
            spec.info_set_A.push_back(bit_reversal(j - 1, n) + 1);
        std::sort(spec.info_set_A.begin(), spec.info_set_A.end());
        spec.finish();
        return spec;
    }

private:
    static CodeSpec base(int n, std::vector<uint32_t>& indices) {
        if (n < 1 || n > 30)
            throw std::invalid_argument("CodeSpec: n out of range");
        CodeSpec spec;
        spec.n = n;
        spec.N = uint32_t(1) << n;
        std::sort(indices.begin(), indices.end());
        if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
            throw std::invalid_argument("CodeSpec: duplicate information index");
        if (!indices.empty() && (indices.front() < 1 || indices.back() > spec.N))
            throw std::invalid_argument("CodeSpec: information index out of 1..N");
        spec.K = static_cast<uint32_t>(indices.size());
        return spec;
    }

    void finish() {
        info_mask.assign(N, 0);
        for (uint32_t j : info_set_B)
            info_mask[j - 1] = 1;
    }
};

// A codeword with its cached Hamming weight.
struct Codeword {
    BitVec bits;
    uint64_t weight = 0;
};

// d_min lower bound of Eq.-(9) form: min over B of the generator row weight.
// Exact d_min for plain polar codes, a lower bound for concatenated ones.
inline uint64_t min_weight_lower_bound(const CodeSpec& spec) {
    if (spec.K == 0)
        throw std::invalid_argument("min_weight_lower_bound: empty information set");
    uint64_t best = uint64_t(1) << spec.n;
    for (uint32_t j : spec.info_set_B)
        best = std::min(best, generator_row_weight(j, spec.n));
    return best;
}

// c = vG via the in-place butterfly, n stages of pairwise XOR on packed words.
inline Codeword encode(const CodeSpec& spec, const BitVec& v) {
    if (v.size() != spec.N)
        throw std::invalid_argument("encode: vector length mismatch");
    for (uint32_t j = 0; j < spec.N; ++j)
        if (!spec.info_mask[j] && v.test(j))
            throw std::invalid_argument("encode: nonzero frozen position");

    Codeword cw{v, 0};
    auto words = cw.bits.words();
    for (uint32_t h = 1; h < spec.N; h <<= 1) {
        if (h >= 64) {
            const size_t hw = h / 64;
            for (size_t block = 0; block < words.size(); block += 2 * hw)
                for (size_t t = 0; t < hw; ++t)
                    words[block + t] ^= words[block + hw + t];
        } else {
            uint64_t mask;
            switch (h) {
                case 1: mask = 0x5555555555555555ull; break;
                case 2: mask = 0x3333333333333333ull; break;
                case 4: mask = 0x0F0F0F0F0F0F0F0Full; break;
                case 8: mask = 0x00FF00FF00FF00FFull; break;
                case 16: mask = 0x0000FFFF0000FFFFull; break;
                default: mask = 0x00000000FFFFFFFFull; break;
            }
            if (spec.N < 64)
                mask &= (uint64_t(1) << spec.N) - 1;
            for (uint64_t& word : words)
                word ^= (word >> h) & mask;
        }
    }
    cw.weight = cw.bits.weight();
    return cw;
}

// Plotkin decomposition c = (c' ^ c'', c''): component information sets per
// B' = B restricted to the left half, B'' = shifted right half. lemma1_ok
// records whether B' is contained in B'' (required for sound SCREM
// recursion); callers decide how to react.
struct PlotkinSplit {
    CodeSpec upper; // C', left half
    CodeSpec lower; // C'', right half
    bool lemma1_ok = false;
};

inline PlotkinSplit plotkin_split(const CodeSpec& spec) {
    if (spec.N < 4)
        throw std::invalid_argument("plotkin_split: N must be at least 4");
    const uint32_t half = spec.N / 2;
    std::vector<uint32_t> b_upper, b_lower;
    for (uint32_t j : spec.info_set_B) {
        if (j <= half)
            b_upper.push_back(j);
        else
            b_lower.push_back(j - half);
    }
    PlotkinSplit split;
    split.lemma1_ok = std::includes(b_lower.begin(), b_lower.end(),
                                    b_upper.begin(), b_upper.end());
    split.upper = CodeSpec::from_info_set_B(spec.n - 1, std::move(b_upper));
    split.lower = CodeSpec::from_info_set_B(spec.n - 1, std::move(b_lower));
    return split;
}

} // namespace pmwd
