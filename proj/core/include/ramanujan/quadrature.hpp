#pragma once

/**
 * @file quadrature.hpp
 * @brief Adaptive numerical integration over finite, semi-infinite and
 *        doubly-infinite intervals with per-call error estimates.
 *
 * The core rule is an adaptive Gauss-Kronrod 7/15 pair: each panel is
 * integrated with the 15-point Kronrod rule, the embedded 7-point Gauss
 * rule supplies the error estimate (QUADPACK-style scaling), and the
 * worst panel is split until the tolerance contract holds.  Infinite
 * intervals are mapped to finite ones by rational transformations,
 *
 *     (a, inf)  : t = a + u/(1-u),       u in (0,1)
 *     (-inf,inf): t = s/(1-s^2),          s in (-1,1)
 *
 * A tanh-sinh (double exponential) rule is provided as an independent
 * second method; it is used by callers that cross-check one integral
 * through two unrelated discretizations.
 *
 * Neither rule ever evaluates an interval endpoint, so integrands with
 * declared endpoint singularities are safe.
 */

#include <functional>
#include <vector>

namespace ramanujan::quad {

enum class Endpoint { lower, upper };

/// A real-valued integrand.  The evaluator must return a finite value at
/// every interior point of the integration domain; endpoints listed in
/// `singular_endpoints` are never evaluated.
struct Integrand {
    std::function<double(double)> fn;
    std::vector<Endpoint> singular_endpoints;

    Integrand(std::function<double(double)> f,
              std::vector<Endpoint> singular = {})
        : fn(std::move(f)), singular_endpoints(std::move(singular)) {}
};

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    /// Upper bound on the number of panels the adaptive subdivision may
    /// create before giving up (reported as converged = false).
    int max_subdivisions = 2000;
    /// Optional caller-supplied truncation point for infinite intervals.
    /// 0 selects the default variable transformation; a positive value U
    /// integrates over the truncated interval instead, and the caller is
    /// responsible for the analytic tail bound.
    double truncation_bound = 0.0;

    /// Throws std::invalid_argument unless at least one tolerance is
    /// strictly positive and the limits are sane.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Integrate f over the finite interval (a, b), a < b.
/// Non-convergence within the subdivision budget is reported through
/// `converged`, never thrown; a non-finite integrand value at an interior
/// point is a hard error (std::runtime_error).
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

/// Integrate f over (a, inf).
QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureConfig& cfg = {});

/// Integrate f over (-inf, inf).
QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureConfig& cfg = {});

/// tanh-sinh rule on the finite interval (a, b); independent of the
/// Gauss-Kronrod path and tolerant of endpoint singularities.
QuadratureResult integrate_tanh_sinh(const Integrand& f, double a, double b,
                                     const QuadratureConfig& cfg = {});

}  // namespace ramanujan::quad
