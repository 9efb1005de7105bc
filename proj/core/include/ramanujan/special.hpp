#pragma once

/**
 * @file special.hpp
 * @brief Self-contained special-function layer: gamma, digamma and
 *        polygamma at positive integers, integer zeta values, and the
 *        Taylor coefficients of Gamma(n+x) about x = 0.
 *
 * Gamma uses the Lanczos approximation (g = 7, 9 coefficients); that
 * choice is fixed for reproducibility.  The psi family is only needed at
 * positive integers where exact finite sums over zeta values apply.
 */

#include <vector>

namespace ramanujan::special {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// Maximum supported order for gamma_taylor (the downstream asymptotic
/// series is divergent; higher orders are never useful).
inline constexpr int max_series_order = 30;

/// Gamma(x) for x > 0; relative error below 1e-13.
double gamma(double x);

/// psi(n) = -euler_gamma + sum_{j=1}^{n-1} 1/j, n >= 1.
double digamma(int n);

/// psi^(k)(n) = (-1)^(k+1) k! (zeta(k+1) - sum_{j=1}^{n-1} j^-(k+1)),
/// k >= 1, n >= 1.
double polygamma(int k, int n);

/// zeta(k) for integer k >= 2, to ~1e-15 relative (Euler-Maclaurin).
double zeta_int(int k);

/// Taylor coefficients of Gamma(n+x) about x = 0:
///   Gamma(n+x) = sum_{k=0..K} coeffs[k] x^k + O(x^{K+1}).
/// Built by exponentiating the log-gamma series
///   log Gamma(n+x) - log Gamma(n) = psi(n) x + sum_{k>=2} psi^(k-1)(n) x^k / k!.
struct GammaTaylor {
    int n;
    std::vector<double> coeffs;  // c_0 .. c_K
};

/// K must satisfy 0 <= K <= max_series_order.
GammaTaylor gamma_taylor(int n, int K);

}  // namespace ramanujan::special
