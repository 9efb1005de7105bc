#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated power-series arithmetic used by the special-function
 *        and expansion-coefficient layers.
 *
 * Series are plain coefficient vectors c[0..K] representing
 * sum_k c[k] x^k; all operations truncate at the shorter order.
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ramanujan::series {

/// Cauchy product truncated at order K (defaults to the shorter input).
inline std::vector<double> multiply(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    int K = -1) {
    if (a.empty() || b.empty()) return {};
    const int ka = static_cast<int>(a.size()) - 1;
    const int kb = static_cast<int>(b.size()) - 1;
    if (K < 0) K = std::min(ka, kb);
    std::vector<double> c(static_cast<std::size_t>(K) + 1, 0.0);
    for (int i = 0; i <= std::min(K, ka); ++i)
        for (int j = 0; j <= std::min(K - i, kb); ++j)
            c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    return c;
}

/// exp of a series with zero constant term, via the standard recurrence
///   b_0 = 1,  k b_k = sum_{j=1..k} j a_j b_{k-j}.
inline std::vector<double> exp(const std::vector<double>& a) {
    if (a.empty() || a[0] != 0.0)
        throw std::invalid_argument("series::exp: constant term must be zero");
    const std::size_t n = a.size();
    std::vector<double> b(n, 0.0);
    b[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        double s = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
            s += static_cast<double>(j) * a[j] * b[k - j];
        b[k] = s / static_cast<double>(k);
    }
    return b;
}

/// Horner evaluation of the truncated series at x.
inline double evaluate(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

}  // namespace ramanujan::series
