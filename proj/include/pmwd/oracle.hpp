// Brute-force reference enumerators. They reuse encode / crc_encode but
// nothing from the sphere-search machinery, so they stay independent of the
// paths they verify. Deliberately plain; capped to small codes.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pmwd/bitvec.hpp"
#include "pmwd/concat.hpp"
#include "pmwd/polar.hpp"

namespace pmwd::oracle {

// weight -> number of codewords at that weight, over the whole codebook.
using FullSpectrum = std::map<uint64_t, uint64_t>;

inline FullSpectrum brute_force_spectrum(const CodeSpec& spec) {
    if (spec.K > 24)
        throw std::invalid_argument("brute_force_spectrum: K capped at 24");
    FullSpectrum spectrum;
    const uint64_t total = uint64_t(1) << spec.K;
    for (uint64_t m = 0; m < total; ++m) {
        BitVec v(spec.N);
        for (uint32_t j = 0; j < spec.K; ++j)
            if ((m >> j) & 1u)
                v.set(spec.info_set_B[j] - 1, true);
        ++spectrum[encode(spec, v).weight];
    }
    return spectrum;
}

inline FullSpectrum brute_force_concat(const ConcatSpec& concat) {
    if (concat.k_i > 20)
        throw std::invalid_argument("brute_force_concat: K_I capped at 20");
    FullSpectrum spectrum;
    const uint64_t total = uint64_t(1) << concat.k_i;
    std::vector<uint8_t> message(concat.k_i, 0);
    for (uint64_t m = 0; m < total; ++m) {
        for (uint32_t j = 0; j < concat.k_i; ++j)
            message[j] = (m >> j) & 1u;
        ++spectrum[concat_encode(concat, message).weight];
    }
    return spectrum;
}

// Minimum nonzero weight and the full codeword set at that weight.
inline std::pair<uint64_t, std::vector<BitVec>> brute_force_min_shell(const CodeSpec& spec) {
    if (spec.K > 24)
        throw std::invalid_argument("brute_force_min_shell: K capped at 24");
    uint64_t best = ~uint64_t(0);
    std::vector<BitVec> shell;
    const uint64_t total = uint64_t(1) << spec.K;
    for (uint64_t m = 1; m < total; ++m) {
        BitVec v(spec.N);
        for (uint32_t j = 0; j < spec.K; ++j)
            if ((m >> j) & 1u)
                v.set(spec.info_set_B[j] - 1, true);
        Codeword cw = encode(spec, v);
        if (cw.weight < best) {
            best = cw.weight;
            shell.clear();
        }
        if (cw.weight == best)
            shell.push_back(std::move(cw.bits));
    }
    return {best, std::move(shell)};
}

inline std::pair<uint64_t, std::vector<BitVec>>
brute_force_concat_min_shell(const ConcatSpec& concat) {
    if (concat.k_i > 20)
        throw std::invalid_argument("brute_force_concat_min_shell: K_I capped at 20");
    uint64_t best = ~uint64_t(0);
    std::vector<BitVec> shell;
    const uint64_t total = uint64_t(1) << concat.k_i;
    std::vector<uint8_t> message(concat.k_i, 0);
    for (uint64_t m = 1; m < total; ++m) {
        for (uint32_t j = 0; j < concat.k_i; ++j)
            message[j] = (m >> j) & 1u;
        Codeword cw = concat_encode(concat, message);
        if (cw.weight < best) {
            best = cw.weight;
            shell.clear();
        }
        if (cw.weight == best)
            shell.push_back(std::move(cw.bits));
    }
    return {best, std::move(shell)};
}

} // namespace pmwd::oracle
