#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace advpos {

/// x^n for integer n, by binary exponentiation.
inline double ipow(double x, long n) {
    const bool invert = n < 0;
    if (invert) n = -n;
    double acc = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return invert ? 1.0 / acc : acc;
}

/// 1 - y^n for y in (0,1], stable when y is close to 1.
inline double one_minus_pow(double y, long n) {
    if (y <= 0.0) return 1.0;
    return -std::expm1(static_cast<double>(n) * std::log(y));
}

/// Mixed absolute/relative discrepancy: |a-b| / max(1, |a|, |b|).
inline double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("linspace: need n >= 1");
    std::vector<double> out(static_cast<size_t>(n));
    if (n == 1) {
        out[0] = a;
        return out;
    }
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = a + h * i;
    out.back() = b;
    return out;
}

/// Geometric grid from a to b (both > 0).
inline std::vector<double> logspace(double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("logspace: need n >= 1");
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("logspace: endpoints must be positive");
    std::vector<double> out(static_cast<size_t>(n));
    if (n == 1) {
        out[0] = a;
        return out;
    }
    const double la = std::log(a), lb = std::log(b);
    const double h = (lb - la) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = std::exp(la + h * i);
    out.back() = b;
    return out;
}

}  // namespace advpos
