#pragma once

/**
 * @file asymptotics.hpp
 * @brief Large-x expansion of the derivative family
 *
 *   int_0^inf e^{-xt} t^{n-1}/(a^2 + log^2 t) dt
 *       ~ x^{-n} sum_k k! Phi_k(a,n) / log^{k+1} x,   x -> inf,
 *
 * where Phi_k(a,n) is the k-th Taylor coefficient of
 *
 *   sin(a s)/a * Gamma(n + s)
 *
 * about s = 0.  With this normalization Phi_0(a,n>=1) = 0,
 * Phi_1(a,n) = Gamma(n), Phi_2(a,n) = Gamma(n) psi(n); the k! belongs to
 * the expansion term, not the coefficient (Watson's lemma applied to the
 * Laplace representation of 1/(a^2 + y^2)).  For n = 0 the Gamma pole is
 * cancelled against the sin zero: sin(as)/a * Gamma(s) = sin(as)/(as) * Gamma(1+s).
 *
 * The series diverges in k; eval_expansion is a truncation and compare()
 * refuses truncation orders past the smallest term.
 */

#include <vector>

#include "ramanujan/quadrature.hpp"

namespace ramanujan::asym {

inline constexpr double default_a = 3.14159265358979323846264338327950288;

struct AsymptoticCoefficients {
    double a;
    int n;
    std::vector<double> coeffs;  // Phi_0 .. Phi_K
};

/// 0 <= K <= special::max_series_order, a > 0, n >= 0.
AsymptoticCoefficients phi_coefficients(double a, int n, int K);

/// Partial sum x^{-n} sum_{k<=K} k! Phi_k / log^{k+1} x; requires x > 1.
double eval_expansion(const AsymptoticCoefficients& c, double x, int K = -1);
double eval_expansion(int n, double x, int K, double a = default_a);

struct ComparisonRecord {
    double quadrature = 0.0;       // (-1)^n I^(n)(x), by direct quadrature
    double expansion = 0.0;        // truncated asymptotic sum
    double rel_dev = 0.0;          // |quadrature - expansion| / |quadrature|
    double next_term_ratio = 0.0;  // |term_{K+1}| / |partial sum|
    bool truncation_ok = true;     // false: requested K past the smallest term
    bool converged = false;        // quadrature convergence flag
};

/// Validates the expansion against direct quadrature.  When the requested
/// K lies past the index of the smallest series term at this x, the
/// record reports truncation_ok = false and no expansion value.
ComparisonRecord compare(int n, double x, int K,
                         const quad::QuadratureConfig& cfg = {},
                         double a = default_a);

}  // namespace ramanujan::asym
