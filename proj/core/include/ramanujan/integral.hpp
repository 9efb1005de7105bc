#pragma once

/**
 * @file integral.hpp
 * @brief The Ramanujan integral
 *
 *     I_R(x) = int_0^inf e^{-xt} dt / (t (pi^2 + log^2 t)),   x > 0,
 *
 * its derivatives, its Bernstein antiderivative, and the densities
 * phi_n(t) = t^{n-1} / (pi^2 + log^2 t) of the derivative family
 *
 *     (-1)^n I_R^{(n)}(x) = int_0^inf e^{-xt} phi_n(t) dt.
 *
 * Every derivative is evaluated from its own integral representation in
 * the u = log t domain, which removes the t = 0 singularity of phi_0 and
 * makes the integrand smooth with a double-exponential right tail.  For
 * n >= 1 the integral is computed in the recentred form
 *
 *     (-1)^n I_R^{(n)}(x) = x^{-n} int e^{n w - e^w} / (pi^2 + (w - log x)^2) dw,
 *
 * so accuracy stays relative even when x^{-n} is extremely small.  For
 * n = 0 the left tail u < -U (where e^{-x e^u} = 1 + O(x e^u)) is added
 * analytically as (1/pi)(pi/2 - arctan(U/pi)).
 */

#include "ramanujan/quadrature.hpp"

namespace ramanujan {

struct EvalRequest {
    int order = 0;      // derivative order n >= 0
    double x = 1.0;     // evaluation point, x > 0
    quad::QuadratureConfig cfg{};
};

struct RamanujanEvaluation {
    EvalRequest request;
    double value = 0.0;      // the signed derivative I_R^(n)(x)
    double abs_error = 0.0;  // propagated quadrature + tail error
    long evaluations = 0;
    bool converged = false;
};

/// phi_n(t) = t^{n-1} / (pi^2 + log^2 t), t > 0.
double density_phi(int n, double t);

/// d/dt phi_n(t); exact closed forms (see file comment in integral.cpp
/// for the n = 0 special form).
double density_phi_derivative(int n, double t);

/// Signed n-th derivative I_R^(n)(x); (-1)^n value is strictly positive.
RamanujanEvaluation eval_derivative(const EvalRequest& req);
RamanujanEvaluation eval_derivative(int n, double x,
                                    const quad::QuadratureConfig& cfg = {});

/// Antiderivative I~_R(x) = int_0^x I_R(y) dy
///                        = int_0^inf (1 - e^{-xt}) dt/(t^2 (pi^2+log^2 t)),
/// an unbounded Bernstein function with I~_R(0+) = 0 (the additive
/// constant is fixed to 0) and I~_R' = I_R.
quad::QuadratureResult eval_antiderivative(double x,
                                           const quad::QuadratureConfig& cfg = {});

/// The convergence certificate int_{-inf}^{inf} du/((1+e^u)(pi^2+u^2)),
/// equal to 1/2.
quad::QuadratureResult bernstein_certificate(const quad::QuadratureConfig& cfg = {});

}  // namespace ramanujan
