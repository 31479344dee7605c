// Reliability constructions: polarization weight (beta expansion) and
// Gaussian-approximation density evolution.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pmwd/polar.hpp"

namespace pmwd {

namespace detail {

// log phi(x) for the GA check-node update, piecewise:
//   x <= x0 : the exponential fit exp(-0.4527 x^0.86 + 0.0218)
//   x >  x0 : the large-mean asymptote sqrt(pi/x) e^{-x/4} (1 - 10/(7x))
// x0 is the crossing point of the two pieces, which keeps the curve
// continuous and strictly decreasing so it can be inverted by bisection.
inline double phi_log_small(double x) { return -0.4527 * std::pow(x, 0.86) + 0.0218; }

inline double phi_log_large(double x) {
    return 0.5 * std::log(M_PI / x) - 0.25 * x + std::log1p(-10.0 / (7.0 * x));
}

inline double phi_segment_boundary() {
    static const double boundary = [] {
        double lo = 10.0, hi = 30.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (phi_log_small(mid) - phi_log_large(mid) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return boundary;
}

inline double phi_log(double x) {
    if (x <= 0.0)
        return 0.0;
    const double value =
        (x <= phi_segment_boundary()) ? phi_log_small(x) : phi_log_large(x);
    return std::min(value, 0.0);
}

// Inverse of phi_log. target <= 0.
inline double phi_log_inverse(double target) {
    if (target >= 0.0)
        return 0.0;
    const double x0 = phi_segment_boundary();
    if (target > phi_log(x0))
        return std::pow((0.0218 - target) / 0.4527, 1.0 / 0.86);
    double lo = x0, hi = std::max(2.0 * x0, -4.0 * target + 64.0);
    while (phi_log(hi) > target)
        hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (phi_log(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Check-node mean update m -> phi^{-1}(1 - (1 - phi(m))^2), evaluated in the
// log domain as ln(phi (2 - phi)).
inline double ga_check_update(double mean) {
    const double lp = phi_log(mean);
    const double p = std::exp(lp); // underflows to 0 for large means
    const double target = lp + std::log(2.0 - p);
    return phi_log_inverse(target);
}

// Ranks 1-based subchannel indices by (reliability, index) descending and
// takes the top K; ties go to the larger index.
inline std::vector<uint32_t> top_k_indices(const std::vector<double>& reliability,
                                           uint32_t k) {
    std::vector<uint32_t> order(reliability.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        if (reliability[a] != reliability[b])
            return reliability[a] > reliability[b];
        return a > b;
    });
    std::vector<uint32_t> picked(order.begin(), order.begin() + k);
    for (uint32_t& i : picked)
        ++i;
    std::sort(picked.begin(), picked.end());
    return picked;
}

} // namespace detail

// Polarization-weight construction: W(i) = sum_j b_j beta^j over the binary
// digits b_j of i-1, beta = 2^{1/4}.
inline CodeSpec construct_pw(int n, uint32_t k) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("construct_pw: n out of range");
    const uint32_t big_n = uint32_t(1) << n;
    if (k < 1 || k > big_n)
        throw std::invalid_argument("construct_pw: K out of 1..N");

    std::vector<double> beta_pow(n);
    for (int j = 0; j < n; ++j)
        beta_pow[j] = std::pow(2.0, 0.25 * j);
    std::vector<double> weight(big_n, 0.0);
    for (uint32_t i = 0; i < big_n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i >> j) & 1u)
                weight[i] += beta_pow[j];
    return CodeSpec::from_info_set_A(n, detail::top_k_indices(weight, k));
}

// Gaussian-approximation construction. The design SNR is Eb/N0 in dB with
// sigma^2 = 1 / (2 R 10^{snr/10}); rate_for_snr is normally K/N but is
// explicit so concatenated designs can pass their outer rate.
inline CodeSpec construct_ga(int n, uint32_t k, double design_snr_db,
                             double rate_for_snr) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("construct_ga: n out of range");
    const uint32_t big_n = uint32_t(1) << n;
    if (k < 1 || k > big_n)
        throw std::invalid_argument("construct_ga: K out of 1..N");
    if (!std::isfinite(design_snr_db))
        throw std::invalid_argument("construct_ga: design SNR must be finite");
    if (!(rate_for_snr > 0.0))
        throw std::invalid_argument("construct_ga: rate must be positive");

    // Mean LLR of the BI-AWGN channel, then one polarization stage per level:
    // index 2i gets the check update, 2i+1 the variable (doubling) update.
    std::vector<double> means{4.0 * rate_for_snr * std::pow(10.0, design_snr_db / 10.0)};
    for (int stage = 0; stage < n; ++stage) {
        std::vector<double> next(means.size() * 2);
        for (size_t i = 0; i < means.size(); ++i) {
            next[2 * i] = detail::ga_check_update(means[i]);
            next[2 * i + 1] = 2.0 * means[i];
        }
        means = std::move(next);
    }
    return CodeSpec::from_info_set_A(n, detail::top_k_indices(means, k));
}

} // namespace pmwd
