#pragma once

/**
 * @file turan.hpp
 * @brief The Turan-type function
 *
 *     H_n(x; alpha) = (I_R^(n)(x))^2 - alpha I_R^(n-1)(x) I_R^(n+1)(x),
 *
 * its Laplace density h_n(t), the auxiliary split factors I_1, I_2, the
 * lemma functions g / p, the alpha thresholds, and the open-interval
 * sign-pattern scanner.
 */

#include <string>
#include <vector>

#include "ramanujan/quadrature.hpp"

namespace ramanujan::turan {

struct TuranParams {
    int n;         // >= 2
    double alpha;
};

/// H_n completely monotone requires alpha <= necessary = (n-1)/n and is
/// guaranteed for alpha <= sufficient = (n-2)/(n-1); the interval between
/// the two is open.
struct AlphaBounds {
    double sufficient;
    double necessary;
};

AlphaBounds alpha_bounds(int n);

struct TuranValue {
    double value = 0.0;
    double abs_error = 0.0;  // first-order sensitivity propagation
    bool converged = false;
};

/// H_n(x; alpha) from the three derivative quadratures.
TuranValue turan_H(const TuranParams& p, double x,
                   const quad::QuadratureConfig& cfg = {});

/// m-th derivative of H_n(x; alpha), assembled by the product rule from
/// exact integral-representation derivatives (never finite differences).
TuranValue turan_H_derivative(const TuranParams& p, double x, int order,
                              const quad::QuadratureConfig& cfg = {});

/// Laplace density of H_n(.; (n-2)/(n-1)):
///   h_n(t) = 1/(n-1) int_0^t phi_{n-1}(u) phi_n(t-u) ((2n-3)u - (n-2)t) du.
quad::QuadratureResult h_density(int n, double t,
                                 const quad::QuadratureConfig& cfg = {});

/// Same density through the symmetric substitution u = (t/2)(1+v) and the
/// even-part reduction; an independent cross-check of h_density.
quad::QuadratureResult h_density_symmetric(int n, double t,
                                           const quad::QuadratureConfig& cfg = {});

/// Split factors of the symmetric form, |v| < 1:
///   i1(v;t)   = prod_{s=+-} (t/2)(1+s v) / (pi^2 + log^2((t/2)(1+s v)))
///   I2(n,v)   = (1-v^2)^{n-3} (1 - (2n-3) v^2)
double i1(double v, double t);
double I2(int n, double v);

/// int_0^1 I2(v) dv from the antiderivative v(1-v^2)^{n-2}: 1 for n = 2,
/// 0 for every n >= 3.
double integral_I2(int n);

/// g(x) = 1/x - 2 log x / (x (pi^2 + log^2 x)), strictly decreasing;
/// g'(x) = -p(x) / (x^2 (pi^2 + log^2 x)^2) with p > 0.
double g(double x);
double g_prime(double x);
double p_poly(double x);

struct LaplaceConsistency {
    double lhs = 0.0;      // H_n(x; (n-2)/(n-1)) via turan_H
    double rhs = 0.0;      // int_0^inf e^{-xt} h_n(t) dt
    double abs_dev = 0.0;
    bool converged = false;
};

/// Dual-route identity check; nested quadrature, documented as slow.
LaplaceConsistency laplace_consistency(int n, double x,
                                       const quad::QuadratureConfig& cfg = {});

/// (I^(n))^2 / (I^(n-1) I^(n+1)); lies in [(n-2)/(n-1), 1].
double cm_ratio(int n, double x, const quad::QuadratureConfig& cfg = {});

struct ScanCell {
    double alpha;
    double x;
    int order;
    double value;      // H_n^(order)(x; alpha)
    double abs_error;
    bool sign_ok;      // (-1)^order * value > 0
};

struct ScanReport {
    int n = 0;
    int max_order = 0;
    std::vector<ScanCell> cells;
    bool all_alternate = false;
    bool alpha_outside_open_interval = false;
    std::string label = "evidence";  // never a proof claim
};

/// Sign-pattern scan of H_n and its derivatives over an (alpha, x) grid.
/// The output is evidence about the open interval, nothing stronger.
ScanReport scan_alpha(int n, const std::vector<double>& alphas,
                      const std::vector<double>& xs, int max_order,
                      const quad::QuadratureConfig& cfg = {});

}  // namespace ramanujan::turan
