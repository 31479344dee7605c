// CRC-polar concatenated codes: parity-check set derivation, the Gaussian
// elimination transform, and the parity-check sphere enumeration (PC-SCEM).

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pmwd/bitvec.hpp"
#include "pmwd/crc.hpp"
#include "pmwd/enumerate.hpp"
#include "pmwd/polar.hpp"

namespace pmwd {

// Outer CRC code on top of an (N, K) polar inner code. mapping[j] is the
// u-domain index carrying s_{j+1}; the default places s onto the info set
// A in ascending order. K_I = K - K_P.
struct ConcatSpec {
    CodeSpec inner;
    CrcPolynomial crc;
    uint32_t k_i = 0;
    std::vector<uint32_t> mapping;
};

inline ConcatSpec make_concat(CodeSpec inner, CrcPolynomial crc,
                              std::vector<uint32_t> mapping = {}) {
    ConcatSpec concat;
    if (crc.degree >= static_cast<int>(inner.K))
        throw std::invalid_argument("make_concat: CRC degree must be below K");
    concat.k_i = inner.K - static_cast<uint32_t>(crc.degree);
    if (mapping.empty()) {
        mapping = inner.info_set_A; // ascending
    } else {
        if (mapping.size() != inner.K)
            throw std::invalid_argument("make_concat: mapping must cover all K positions");
        std::vector<uint32_t> sorted = mapping;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != inner.info_set_A)
            throw std::invalid_argument("make_concat: mapping must be a permutation of A");
    }
    concat.inner = std::move(inner);
    concat.crc = crc;
    concat.mapping = std::move(mapping);
    return concat;
}

// Raw parity-check sets R_i(v): each CRC parity equation lifted from the
// s domain through the mapping f to u indices and through bit reversal to
// v indices. Sets are 1-based and sorted.
inline std::vector<std::vector<uint32_t>> derive_parity_sets(const ConcatSpec& concat) {
    const int k_p = concat.crc.degree;
    const uint32_t k = concat.inner.K;
    const uint32_t k_i = concat.k_i;

    // Column j of the systematic parity part: remainder of x^{K_P + K_I - j}
    // mod g, computed by iterated shifts.
    std::vector<uint64_t> column(k_i + 1);
    uint64_t reg = 1;
    const uint64_t top = uint64_t(1) << k_p;
    for (int t = 0; t < k_p; ++t) {
        reg <<= 1;
        if (reg & top)
            reg ^= concat.crc.coefficients;
    }
    column[k_i] = reg; // x^{K_P} mod g, i.e. the j = K_I unit message
    for (uint32_t j = k_i; j-- > 1;) {
        reg <<= 1;
        if (reg & top)
            reg ^= concat.crc.coefficients;
        column[j] = reg;
    }

    std::vector<std::vector<uint32_t>> sets;
    sets.reserve(k_p);
    for (int i = 1; i <= k_p; ++i) {
        std::vector<uint32_t> in_v;
        for (uint32_t j = 1; j <= k; ++j) {
            bool member;
            if (j <= k_i)
                member = (column[j] >> (k_p - i)) & 1u; // P part, H = [P | I]
            else
                member = (j == k_i + uint32_t(i));
            if (member) {
                const uint32_t u_index = concat.mapping[j - 1];
                in_v.push_back(bit_reversal(u_index - 1, concat.inner.n) + 1);
            }
        }
        std::sort(in_v.begin(), in_v.end());
        sets.push_back(std::move(in_v));
    }
    return sets;
}

// Parity-check sets after the row-echelon transform; parity_bit_indices
// k_i = min(Q_i) are pairwise distinct so each parity bit is decidable from
// the already-searched suffix.
struct ParityCheckSystem {
    std::vector<std::vector<uint32_t>> sets;
    std::vector<uint32_t> parity_bit_indices;
};

// GF(2) Gaussian elimination over the K_P x N indicator matrix, pivoting on
// the lowest column index first to match the N -> 1 search order.
inline ParityCheckSystem transform_parity_sets(const std::vector<std::vector<uint32_t>>& raw,
                                               uint32_t big_n) {
    std::vector<BitVec> rows;
    rows.reserve(raw.size());
    for (const auto& set : raw) {
        if (set.empty())
            throw std::invalid_argument("transform_parity_sets: empty parity set");
        BitVec row(big_n);
        for (uint32_t index : set) {
            if (index < 1 || index > big_n)
                throw std::invalid_argument("transform_parity_sets: index out of 1..N");
            row.set(index - 1, true);
        }
        rows.push_back(std::move(row));
    }

    size_t next = 0;
    for (uint32_t col = 0; col < big_n && next < rows.size(); ++col) {
        size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].test(col))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[next], rows[pivot]);
        for (size_t q = next + 1; q < rows.size(); ++q)
            if (rows[q].test(col))
                rows[q] ^= rows[next];
        ++next;
    }
    if (next < rows.size())
        throw std::runtime_error("transform_parity_sets: linearly dependent parity equations");

    ParityCheckSystem system;
    system.sets.reserve(rows.size());
    system.parity_bit_indices.reserve(rows.size());
    for (const BitVec& row : rows) {
        std::vector<uint32_t> set;
        for (uint32_t t = 0; t < big_n; ++t)
            if (row.test(t))
                set.push_back(t + 1);
        system.parity_bit_indices.push_back(set.front());
        system.sets.push_back(std::move(set));
    }
    return system;
}

// Message -> concatenated codeword (CRC encode, map onto u, bit-reverse to
// v, polar encode). Shared with the brute-force oracle.
inline Codeword concat_encode(const ConcatSpec& concat, const std::vector<uint8_t>& message) {
    if (message.size() != concat.k_i)
        throw std::invalid_argument("concat_encode: message length mismatch");
    const std::vector<uint8_t> s = crc_encode(concat.crc, message);
    BitVec v(concat.inner.N);
    for (uint32_t j = 0; j < s.size(); ++j)
        if (s[j])
            v.set(bit_reversal(concat.mapping[j] - 1, concat.inner.n), true);
    return encode(concat.inner, v);
}

// PC-SCEM, Algorithm-4 shape: the sphere search with parity bits forced by
// the transformed equations, restarted with radius + 2 until a nonzero
// codeword lands inside the sphere.
inline MwdResult pc_scem(const ConcatSpec& concat, EnumMode mode,
                         const CodewordSink& sink = {}) {
    const CodeSpec& inner = concat.inner;
    const ParityCheckSystem system =
        transform_parity_sets(derive_parity_sets(concat), inner.N);

    std::vector<detail::BitRole> roles(inner.N, detail::BitRole::frozen);
    for (uint32_t j : inner.info_set_B)
        roles[j - 1] = detail::BitRole::info;
    std::vector<std::vector<uint32_t>> terms(inner.N);
    for (size_t i = 0; i < system.sets.size(); ++i) {
        const uint32_t pivot = system.parity_bit_indices[i];
        if (roles[pivot - 1] != detail::BitRole::info)
            throw std::logic_error("pc_scem: parity bit fell on a frozen position");
        roles[pivot - 1] = detail::BitRole::parity;
        for (uint32_t index : system.sets[i])
            if (index != pivot)
                terms[pivot - 1].push_back(index - 1);
    }

    const bool expect_even = inner.info_mask[0] == 0;
    uint64_t radius = min_weight_lower_bound(inner);
    uint64_t total_avn = 0;
    for (;;) {
        auto out = detail::sphere_search(inner.N, roles, terms, radius,
                                         mode == EnumMode::collect,
                                         std::numeric_limits<size_t>::max(), sink,
                                         expect_even);
        total_avn += out.avn;
        if (out.shell.count > 0) {
            MwdResult result;
            result.d_min = out.shell.best;
            result.a_dmin = out.shell.count;
            result.codewords = std::move(out.shell.set);
            result.avn = total_avn;
            return result;
        }
        const uint64_t next = (radius & 1) ? radius + 1 : radius + 2;
        if (next > inner.N)
            throw std::logic_error("pc_scem: radius escalated past the code length");
        radius = next;
    }
}

} // namespace pmwd
