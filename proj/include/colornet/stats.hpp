#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace colornet::stats {

inline double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double population_sd(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size()));
}

// n-1 denominator; 0 for fewer than two samples.
inline double sample_sd(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

// Even counts average the two central values.
inline double median(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    const auto mid = xs.size() / 2;
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
    const double hi = xs[mid];
    if (xs.size() % 2 == 1) return hi;
    const double lo = *std::max_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lo + hi) / 2.0;
}

/// Half-width of a normal-approximation confidence interval for the mean.
inline double ci_half_width(std::span<const double> xs, double z = 2.5758293035489004) {
    if (xs.size() < 2) return 0.0;
    return z * sample_sd(xs) / std::sqrt(static_cast<double>(xs.size()));
}

} // namespace colornet::stats
