#pragma once

/**
 * @file verify.hpp
 * @brief Declarative inequality suites over grids: each proved claim
 *        becomes a named check producing a machine-readable result with
 *        worst margins.
 *
 * Margin convention: an inequality lhs <= rhs passes when
 *     lhs - rhs <= tolerance * max(|lhs|, |rhs|),
 * and the reported (signed) margin is (rhs - lhs) / max(|lhs|, |rhs|);
 * positive margins are healthy.  Positivity claims compare against ten
 * times the propagated quadrature error estimate, so margins are never
 * noise.  Strictly-decreasing claims are tested as finite-grid
 * monotonicity with the same error-scaled strictness.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ramanujan/config.hpp"
#include "ramanujan/quadrature.hpp"

namespace ramanujan::verify {

struct CheckSpec {
    std::string name;
    std::vector<double> grid;
    std::vector<std::pair<double, double>> point_pairs;
    std::vector<int> orders;
    double tolerance = 1e-9;
    std::map<std::string, double> parameters;

    void validate() const;  // non-empty evaluation set, positive tolerance
};

/// One evaluated comparison; the CSV emits one row per entry.
struct Row {
    double point = 0.0;
    double point2 = 0.0;  // second point of a pair, else 0
    int order = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // signed, relative; positive = healthy
    double err = 0.0;     // propagated absolute error estimate
    bool pass = true;
    bool numerical_ok = true;
};

struct Violation {
    double point;
    double lhs;
    double rhs;
    double margin;
    std::string note;
};

struct CheckResult {
    CheckSpec spec;
    bool passed = false;           // <=> violations.empty()
    bool numerical_failure = false;
    std::vector<Violation> violations;
    std::vector<Row> rows;
    double worst_margin = 0.0;
    std::string notes;
};

// ---------------------------------------------------------------------
// Individual checks

/// (-1)^m I_R^(m)(x) > 10 * error_estimate for m = 0..max_order.
CheckResult check_complete_monotonicity(int max_order,
                                        const std::vector<double>& grid,
                                        const quad::QuadratureConfig& cfg);

/// (-1)^n I^(n)(ax+(1-a)y) <= ((-1)^n I^(n)(x))^a ((-1)^n I^(n)(y))^(1-a).
CheckResult check_log_convexity(int n, double alpha,
                                const std::vector<std::pair<double, double>>& pairs,
                                const quad::QuadratureConfig& cfg);

/// (I^(n)(x+1))^2 <= I^(n)(x) I^(n)(x+2).
CheckResult check_turan_shifted(int n, const std::vector<double>& grid,
                                const quad::QuadratureConfig& cfg);

/// x^{m+1} (-1)^{n+m} I^{(n+m)}(x) non-negative and strictly decreasing
/// across the grid, m = 0..max_order; n >= 2.
CheckResult check_strong_cm(int n, int max_order,
                            const std::vector<double>& grid,
                            const quad::QuadratureConfig& cfg);

/// The n = 0 / n = 1 analogs provably fail the decrease; this fixture
/// passes exactly when the underlying profile detects a violation.
CheckResult check_strong_cm_expected_failure(int n, int max_order,
                                             const std::vector<double>& grid,
                                             const quad::QuadratureConfig& cfg);

/// Parity-split superadditive and star-shaped scaling bounds, n >= 2:
///   even n: I(x)+I(y) <= I(x)I(y)/I(x+y)   and  beta I(beta x) >= I(x)
///   odd  n: both directions reversed.
CheckResult check_superadditive_starshaped(int n,
                                           const std::vector<std::pair<double, double>>& pairs,
                                           const std::vector<double>& betas,
                                           const quad::QuadratureConfig& cfg);

/// Sign alternation of phi_0 and its derivatives (closed forms through
/// order 2, Richardson finite differences beyond); evidence only.
CheckResult check_density_cm_evidence(int max_order,
                                      const std::vector<double>& t_grid,
                                      double h_step);

/// k-th derivative of phi_0 at t: closed forms for k <= 2, Richardson
/// central differences of the order-2 closed form for k = 3..6.
/// fd_error receives the extrapolation error estimate (0 for closed forms).
double phi0_derivative(int k, double t, double h_step, double* fd_error);

/// h_n(t) >= -10 * error_estimate over the t grid.
CheckResult check_h_density_nonneg(int n, const std::vector<double>& t_grid,
                                   const quad::QuadratureConfig& cfg);

/// (n-2)/(n-1) - 1e-9 <= (I^(n))^2/(I^(n-1) I^(n+1)) <= 1 + tolerance.
CheckResult check_cm_ratio_bound(int n, const std::vector<double>& grid,
                                 const quad::QuadratureConfig& cfg);

/// g'(x) < 0 and p(x) > 0; closed-form g' matches central differences.
CheckResult check_g_lemma(const std::vector<double>& grid);

/// The real-line certificate equals 1/2 within 1e-10.
CheckResult check_bernstein_certificate(const quad::QuadratureConfig& cfg);

/// rel_dev(x = e^20, K = 2) < rel_dev(x = e^10, K = 2) for n = 1..3.
CheckResult check_asymptotic_consistency(const quad::QuadratureConfig& cfg);

/// |H_n(x; (n-2)/(n-1)) - Laplace of h_n| <= tol on the (n, x) cells.
CheckResult check_laplace_consistency(const std::vector<int>& ns,
                                      const std::vector<double>& xs,
                                      double tol,
                                      const quad::QuadratureConfig& cfg);

// ---------------------------------------------------------------------
// Suite

struct SuiteConfig {
    quad::QuadratureConfig quad{};
    double tolerance = 1e-9;

    int cm_max_order = 8;
    std::vector<double> cm_grid;  // 31-point log grid on [1e-2, 1e4]

    int strong_cm_max_order = 4;

    int shifted_max_n = 4;

    int pair_count = 20;
    std::uint64_t seed = 0x52414d414e554a41ull;

    std::vector<double> h_grid;  // 40-point log grid on [1e-3, 50]

    std::vector<int> laplace_ns = {2, 3, 4};
    std::vector<double> laplace_xs = {0.5, 1.0, 2.0};
    double laplace_tol = 1e-6;

    bool enable_laplace = true;  // the one slow check
    bool negative_control_inverted = false;
    bool negative_control_tolerance = false;

    std::string only;  // run only checks whose name contains this
};

SuiteConfig default_suite_config();

/// Keys (all optional): quadrature.{abs_tol,rel_tol,max_subdivisions},
/// suite.{tolerance,seed,only,cm_max_order,strong_cm_max_order,pair_count},
/// grids.{cm_min,cm_max,cm_points,h_min,h_max,h_points},
/// checks.{laplace,negative_control_inverted,negative_control_tolerance},
/// laplace.{ns,xs,tol}.
SuiteConfig suite_config_from(const config::Config& cfg);

/// Effective settings as a flat config (the hash input; reruns with the
/// same effective configuration hash identically).
config::Config effective_config(const SuiteConfig& cfg);

struct Report {
    std::vector<CheckResult> results;
    std::string version;
    std::string config_hash;  // hex FNV-1a of the effective config

    int passed_count() const;
    int violation_count() const;
    int numerical_failure_count() const;
    /// 0 all passed, 1 any violation, 2 any numerical/config failure.
    int exit_code() const;
};

Report run_suite(const SuiteConfig& cfg);

/// Key-value tree serialization (schema "report-v1").
std::string to_text(const Report& report);
/// One row per evaluated grid point per check (schema "report-v1").
std::string to_csv(const Report& report);

}  // namespace ramanujan::verify
