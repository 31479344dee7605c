// Sphere-constraint enumeration of minimum-weight codewords: plain
// depth-first search (SCEM) and the Plotkin-recursive variant (SCREM).

#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmwd/bitvec.hpp"
#include "pmwd/polar.hpp"

namespace pmwd {

enum class EnumMode { count, collect };

// Minimum weight distribution: d_min, its multiplicity, the codeword shell
// (collect mode only) and the visited-node counter. One visit = one
// assignment of a single bit v_k, counted again when backtracking flips it.
struct MwdResult {
    uint64_t d_min = 0;
    uint64_t a_dmin = 0;
    std::vector<BitVec> codewords;
    uint64_t avn = 0;
    std::vector<std::string> flags;
};

// Receives every nonzero codeword with weight <= radius as it is enumerated.
using CodewordSink = std::function<void(const BitVec&, uint64_t)>;

struct ScremOptions {
    // Case-2 recombination materializes component shells; beyond this many
    // codewords the recursion falls back to plain SCEM on the parent code.
    size_t collect_cap = 10'000'000;
};

namespace detail {

struct CollectCapExceeded : std::runtime_error {
    CollectCapExceeded() : std::runtime_error("codeword set exceeds the collect cap") {}
};

enum class BitRole : uint8_t { frozen = 0, info = 1, parity = 2 };

// Tracks the minimum-weight shell among recorded nonzero codewords.
struct ShellAccum {
    uint64_t best = std::numeric_limits<uint64_t>::max();
    uint64_t count = 0;
    bool keep_set = false;
    size_t cap = std::numeric_limits<size_t>::max();
    std::vector<BitVec> set;

    // Returns true when the codeword itself is needed (new shell member).
    bool note(uint64_t w) {
        if (w < best) {
            best = w;
            count = 0;
            set.clear();
        }
        if (w != best)
            return false;
        if (count == std::numeric_limits<uint64_t>::max())
            throw std::overflow_error("a_dmin counter overflow");
        ++count;
        return keep_set;
    }

    void store(BitVec&& cw) {
        if (set.size() >= cap)
            throw CollectCapExceeded();
        set.push_back(std::move(cw));
    }
};

struct SearchOutcome {
    ShellAccum shell;
    uint64_t avn = 0;
    bool zero_seen = false;
};

// Depth-first search of Algorithm-1 shape over bits v_N..v_1. Information
// bits branch with the c_k = 0 side first, frozen bits force v_k = 0,
// parity bits force v_k from already-searched positions. A path survives
// while its partial codeword weight stays within the radius; the all-zero
// path is enumerated like any other and excluded by the caller.
//
// The accumulator g keeps, for every position t, the XOR of v_j over the
// currently assigned j with (t-1) a bit-submask of (j-1); in other words
// c_t = v_t ^ g[t] at the moment level t is reached. Assigning v_j = 1
// toggles exactly the submask positions of j-1 (the support of generator
// row j), so maintenance cost equals the row weight.
inline SearchOutcome sphere_search(uint32_t big_n, const std::vector<BitRole>& roles,
                                   const std::vector<std::vector<uint32_t>>& parity_terms,
                                   uint64_t radius, bool keep_set, size_t cap,
                                   const CodewordSink& sink, bool expect_even_weights) {
    SearchOutcome out;
    out.shell.keep_set = keep_set;
    out.shell.cap = cap;

    std::vector<uint8_t> v(big_n, 0), c(big_n, 0), g(big_n, 0);
    uint64_t pw = 0; // partial weight of the assigned suffix
    uint32_t k = big_n;

    auto toggle_row = [&](uint32_t mask) {
        uint32_t s = mask;
        for (;;) {
            g[s] ^= 1;
            if (s == 0)
                break;
            s = (s - 1) & mask;
        }
    };

    auto assign = [&](uint32_t level) {
        const uint32_t idx = level - 1;
        uint8_t bit;
        switch (roles[idx]) {
            case BitRole::info:
                bit = g[idx];
                c[idx] = 0;
                break;
            case BitRole::parity: {
                uint8_t forced = 0;
                for (uint32_t t : parity_terms[idx])
                    forced ^= v[t];
                bit = forced;
                c[idx] = uint8_t(bit ^ g[idx]);
                break;
            }
            default:
                bit = 0;
                c[idx] = g[idx];
                break;
        }
        v[idx] = bit;
        if (bit)
            toggle_row(idx);
        pw += c[idx];
        ++out.avn;
    };

    auto record = [&]() {
        if (pw == 0) {
            out.zero_seen = true;
            return;
        }
        if (expect_even_weights && (pw & 1))
            throw std::logic_error("odd-weight codeword with position 1 frozen");
        const bool want = out.shell.note(pw);
        if (want || sink) {
            BitVec cw(big_n);
            for (uint32_t t = 0; t < big_n; ++t)
                if (c[t])
                    cw.set(t, true);
            if (sink)
                sink(cw, pw);
            if (want)
                out.shell.store(std::move(cw));
        }
    };

    assign(k);
    for (;;) {
        if (pw <= radius) {
            if (k > 1) {
                --k;
                assign(k);
                continue;
            }
            record();
        }
        // prune: hand the subtree back, then resume at the lowest
        // information bit whose c_k = 1 branch is still unexplored
        bool resumed = false;
        while (k <= big_n) {
            const uint32_t idx = k - 1;
            if (roles[idx] == BitRole::info && c[idx] == 0) {
                v[idx] ^= 1;
                toggle_row(idx);
                c[idx] = 1;
                ++pw;
                ++out.avn;
                resumed = true;
                break;
            }
            pw -= c[idx];
            if (v[idx])
                toggle_row(idx);
            v[idx] = 0;
            c[idx] = 0;
            ++k;
        }
        if (!resumed)
            break;
    }
    return out;
}

inline std::vector<BitRole> plain_roles(const CodeSpec& spec) {
    std::vector<BitRole> roles(spec.N, BitRole::frozen);
    for (uint32_t j : spec.info_set_B)
        roles[j - 1] = BitRole::info;
    return roles;
}

inline MwdResult scem_impl(const CodeSpec& spec, uint64_t radius, EnumMode mode,
                           const CodewordSink& sink, size_t cap) {
    if (radius < 1)
        throw std::invalid_argument("scem: radius must be at least 1");
    static const std::vector<std::vector<uint32_t>> no_parity;
    auto out = sphere_search(spec.N, plain_roles(spec), no_parity, radius,
                             mode == EnumMode::collect, cap, sink,
                             spec.K == 0 || spec.info_mask[0] == 0);
    MwdResult result;
    result.avn = out.avn;
    if (out.shell.count > 0) {
        result.d_min = out.shell.best;
        result.a_dmin = out.shell.count;
        result.codewords = std::move(out.shell.set);
    }
    return result;
}

} // namespace detail

// Enumerates every nonzero codeword with weight <= radius; d_min / a_dmin
// describe the lightest shell found and, with radius = exact d_min, the
// collected codewords are exactly the MWD set T.
inline MwdResult scem(const CodeSpec& spec, uint64_t radius, EnumMode mode,
                      const CodewordSink& sink = {}) {
    return detail::scem_impl(spec, radius, mode, sink,
                             std::numeric_limits<size_t>::max());
}

// T4 of Lemma 3: pairs c' (weight 2*half_d) and c'' (weight half_d) whose
// combination (c' ^ c'', c'') lands on the parent shell, i.e. wt(c' ^ c'')
// = half_d, which for these weights means supp(c'') is inside supp(c').
// Distinct pairs give distinct codewords, so the output needs no dedup.
inline std::vector<BitVec> build_t4(const std::vector<BitVec>& t_prime,
                                    const std::vector<BitVec>& t_double_prime,
                                    uint64_t half_d) {
    std::vector<BitVec> out;
    if (t_prime.empty() || t_double_prime.empty())
        return out;
    assert(t_prime.front().weight() == 2 * half_d);
    assert(t_double_prime.front().weight() == half_d);
    (void)half_d;
    const uint32_t half_n = t_prime.front().size();
    std::vector<std::vector<const BitVec*>> by_first_bit(half_n);
    for (const BitVec& cw : t_double_prime)
        by_first_bit[cw.lowest_set_bit()].push_back(&cw);
    for (const BitVec& upper : t_prime) {
        for (uint32_t t = 0; t < half_n; ++t) {
            if (!upper.test(t))
                continue;
            for (const BitVec* lower : by_first_bit[t])
                if (lower->is_subset_of(upper))
                    out.push_back(BitVec::concat(upper ^ *lower, *lower));
        }
    }
    return out;
}

namespace detail {

// Count-only variant of build_t4 used on the screm count path.
inline uint64_t count_t4(const std::vector<BitVec>& t_prime,
                         const std::vector<BitVec>& t_double_prime) {
    if (t_prime.empty() || t_double_prime.empty())
        return 0;
    const uint32_t half_n = t_prime.front().size();
    std::vector<std::vector<const BitVec*>> by_first_bit(half_n);
    for (const BitVec& cw : t_double_prime)
        by_first_bit[cw.lowest_set_bit()].push_back(&cw);
    uint64_t total = 0;
    for (const BitVec& upper : t_prime)
        for (uint32_t t = 0; t < half_n; ++t) {
            if (!upper.test(t))
                continue;
            for (const BitVec* lower : by_first_bit[t])
                if (lower->is_subset_of(upper))
                    ++total;
        }
    return total;
}

inline uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("a_dmin counter overflow");
    return r;
}

struct ScremNode {
    uint64_t d = 0;
    uint64_t count = 0;
    std::vector<BitVec> set;
    uint64_t avn = 0;
    bool fallback = false;
};

inline ScremNode screm_leaf(const CodeSpec& spec, uint64_t d, bool need_set,
                            size_t cap, bool mark_fallback) {
    MwdResult base = scem_impl(spec, d, need_set ? EnumMode::collect : EnumMode::count,
                               {}, cap);
    if (base.a_dmin == 0 || base.d_min != d)
        throw std::logic_error("screm: leaf enumeration disagrees with the row-weight bound");
    ScremNode node;
    node.d = d;
    node.count = base.a_dmin;
    node.set = std::move(base.codewords);
    node.avn = base.avn;
    node.fallback = mark_fallback;
    return node;
}

inline ScremNode screm_rec(const CodeSpec& spec, bool need_set, const ScremOptions& opts) {
    const uint64_t d = min_weight_lower_bound(spec);
    const size_t cap = opts.collect_cap;
    if (spec.N == 2)
        return screm_leaf(spec, d, need_set, cap, false);

    PlotkinSplit split = plotkin_split(spec);
    if (!split.lemma1_ok)
        return screm_leaf(spec, d, need_set, cap, true);
    if (split.upper.K == 0 || split.lower.K == spec.N / 2)
        return screm_leaf(spec, d, need_set, cap, false);

    const uint64_t d_up = min_weight_lower_bound(split.upper);
    const uint64_t d_lo = min_weight_lower_bound(split.lower);
    if (d != std::min(d_up, 2 * d_lo))
        throw std::logic_error("screm: parent weight bound inconsistent with split");

    ScremNode node;
    node.d = d;
    const uint32_t half_n = spec.N / 2;

    auto push = [&](BitVec&& cw) {
        if (node.set.size() >= cap)
            throw CollectCapExceeded();
        node.set.push_back(std::move(cw));
    };

    if (d_up == d_lo) {
        // case 1: T = T1 u T2, lower shell unused
        ScremNode up = screm_rec(split.upper, need_set, opts);
        node.count = checked_add(up.count, up.count);
        node.avn = up.avn;
        node.fallback = up.fallback;
        if (need_set) {
            const BitVec zero(half_n);
            for (BitVec& cw : up.set) {
                push(BitVec::concat(cw, zero));
                push(BitVec::concat(zero, cw));
            }
        }
    } else if (d_up == 2 * d_lo) {
        // case 2: both shells feed T1..T4
        ScremNode up, lo;
        uint64_t t4_count = 0;
        std::vector<BitVec> t4;
        try {
            up = screm_rec(split.upper, true, opts);
            lo = screm_rec(split.lower, true, opts);
            if (need_set) {
                t4 = build_t4(up.set, lo.set, d_lo);
                if (t4.size() > cap)
                    throw CollectCapExceeded();
                t4_count = t4.size();
            } else {
                t4_count = count_t4(up.set, lo.set);
            }
        } catch (const CollectCapExceeded&) {
            return screm_leaf(spec, d, need_set, cap, true);
        }
        node.count = checked_add(checked_add(up.count, up.count),
                                 checked_add(lo.count, t4_count));
        node.avn = up.avn + lo.avn;
        node.fallback = up.fallback || lo.fallback;
        if (need_set) {
            const BitVec zero(half_n);
            for (BitVec& cw : up.set) {
                push(BitVec::concat(cw, zero));
                push(BitVec::concat(zero, cw));
            }
            for (BitVec& cw : lo.set)
                push(BitVec::concat(cw, cw));
            for (BitVec& cw : t4)
                push(std::move(cw));
        }
    } else if (d_up > 2 * d_lo) {
        // case 3: T = T3, upper shell unused
        ScremNode lo = screm_rec(split.lower, need_set, opts);
        node.count = lo.count;
        node.avn = lo.avn;
        node.fallback = lo.fallback;
        if (need_set)
            for (BitVec& cw : lo.set)
                push(BitVec::concat(cw, cw));
    } else {
        throw std::logic_error("screm: (d', d'') outside the three Lemma-3 cases");
    }
    // T1..T4 are pairwise disjoint by their (left, right) zero patterns, so
    // the union size must equal the combined count
    if (need_set && node.set.size() != node.count)
        throw std::logic_error("screm: recombined subsets are not disjoint");
    return node;
}

} // namespace detail

// Recursive enumeration via the Plotkin split. Returns the same result as
// scem at the exact d_min; subtrees whose split violates the subcode
// condition (or whose case-2 shells exceed the collect cap) fall back to
// plain SCEM and set the fallback_used flag.
inline MwdResult screm(const CodeSpec& spec, uint64_t d_min_hint, EnumMode mode,
                       const ScremOptions& opts = {}) {
    if (d_min_hint != min_weight_lower_bound(spec))
        throw std::invalid_argument("screm: d_min hint inconsistent with the row-weight bound");
    detail::ScremNode node;
    try {
        node = detail::screm_rec(spec, mode == EnumMode::collect, opts);
    } catch (const detail::CollectCapExceeded&) {
        throw std::runtime_error("screm: codeword set exceeds the collect cap; use count mode");
    }
    MwdResult result;
    result.d_min = node.d;
    result.a_dmin = node.count;
    result.codewords = std::move(node.set);
    result.avn = node.avn;
    if (node.fallback)
        result.flags.push_back("fallback_used");
    return result;
}

} // namespace pmwd
