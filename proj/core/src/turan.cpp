#include "ramanujan/turan.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "ramanujan/integral.hpp"

namespace ramanujan::turan {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;
constexpr double pi_sq = pi * pi;

void require_n(int n, const char* who) {
    if (n < 2) throw std::domain_error(std::string(who) + ": requires n >= 2");
}

double binomial(int m, int j) {
    double c = 1.0;
    for (int i = 1; i <= j; ++i) c = c * (m - j + i) / i;
    return c;
}

struct DerivativeTable {
    std::vector<double> value;  // signed I^(k)(x)
    std::vector<double> error;
    bool converged = true;
    long evaluations = 0;
};

DerivativeTable eval_range(int k_lo, int k_hi, double x,
                           const quad::QuadratureConfig& cfg) {
    DerivativeTable t;
    t.value.resize(static_cast<std::size_t>(k_hi) + 1, 0.0);
    t.error.resize(static_cast<std::size_t>(k_hi) + 1, 0.0);
    for (int k = k_lo; k <= k_hi; ++k) {
        const auto ev = eval_derivative(k, x, cfg);
        t.value[static_cast<std::size_t>(k)] = ev.value;
        t.error[static_cast<std::size_t>(k)] = ev.abs_error;
        t.converged = t.converged && ev.converged;
        t.evaluations += ev.evaluations;
    }
    return t;
}

// H_n^(m) = sum_j C(m,j) I^(n+j) I^(n+m-j)
//         - alpha sum_j C(m,j) I^(n-1+j) I^(n+1+m-j),
// with first-order error propagation.
TuranValue assemble_H_derivative(const TuranParams& p, int m,
                                 const DerivativeTable& t) {
    TuranValue out;
    out.converged = t.converged;
    double v = 0.0, e = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double c = binomial(m, j);
        const std::size_t a1 = static_cast<std::size_t>(p.n + j);
        const std::size_t b1 = static_cast<std::size_t>(p.n + m - j);
        v += c * t.value[a1] * t.value[b1];
        e += c * (std::abs(t.value[a1]) * t.error[b1] +
                  std::abs(t.value[b1]) * t.error[a1]);
        const std::size_t a2 = static_cast<std::size_t>(p.n - 1 + j);
        const std::size_t b2 = static_cast<std::size_t>(p.n + 1 + m - j);
        v -= p.alpha * c * t.value[a2] * t.value[b2];
        e += std::abs(p.alpha) * c * (std::abs(t.value[a2]) * t.error[b2] +
                                      std::abs(t.value[b2]) * t.error[a2]);
    }
    out.value = v;
    out.abs_error = e;
    return out;
}

}  // namespace

AlphaBounds alpha_bounds(int n) {
    require_n(n, "alpha_bounds");
    return AlphaBounds{(n - 2.0) / (n - 1.0), (n - 1.0) / n};
}

TuranValue turan_H(const TuranParams& p, double x,
                   const quad::QuadratureConfig& cfg) {
    return turan_H_derivative(p, x, 0, cfg);
}

TuranValue turan_H_derivative(const TuranParams& p, double x, int order,
                              const quad::QuadratureConfig& cfg) {
    require_n(p.n, "turan_H");
    if (!(x > 0.0)) throw std::domain_error("turan_H: requires x > 0");
    if (order < 0) throw std::domain_error("turan_H_derivative: requires order >= 0");
    const auto t = eval_range(p.n - 1, p.n + 1 + order, x, cfg);
    return assemble_H_derivative(p, order, t);
}

quad::QuadratureResult h_density(int n, double t,
                                 const quad::QuadratureConfig& cfg) {
    require_n(n, "h_density");
    if (!(t > 0.0)) throw std::domain_error("h_density: requires t > 0");
    quad::Integrand f(
        [n, t](double u) {
            return density_phi(n - 1, u) * density_phi(n, t - u) *
                   ((2 * n - 3) * u - (n - 2) * t);
        },
        {quad::Endpoint::lower, quad::Endpoint::upper});
    auto r = quad::integrate_finite(f, 0.0, t, cfg);
    r.value /= (n - 1);
    r.error_estimate /= (n - 1);
    return r;
}

quad::QuadratureResult h_density_symmetric(int n, double t,
                                           const quad::QuadratureConfig& cfg) {
    require_n(n, "h_density_symmetric");
    if (!(t > 0.0)) throw std::domain_error("h_density_symmetric: requires t > 0");
    // even part of the substituted integrand; the pair of (t/2)(1 +- v)
    // powers is kept together so n = 2 stays bounded as v -> 1.
    quad::Integrand f(
        [n, t](double v) {
            const double A = 0.5 * t * (1.0 + v);
            const double B = 0.5 * t * (1.0 - v);
            const double la = std::log(A), lb = std::log(B);
            const double powers = std::pow(A * B, n - 2);
            return powers / ((pi_sq + la * la) * (pi_sq + lb * lb)) *
                   (1.0 - (2 * n - 3) * v * v);
        },
        {quad::Endpoint::upper});
    auto r = quad::integrate_finite(f, 0.0, 1.0, cfg);
    const double factor = t * t * t / (4.0 * (n - 1));
    r.value *= factor;
    r.error_estimate *= factor;
    return r;
}

double i1(double v, double t) {
    if (!(std::abs(v) < 1.0)) throw std::domain_error("i1: requires |v| < 1");
    if (!(t > 0.0)) throw std::domain_error("i1: requires t > 0");
    const double A = 0.5 * t * (1.0 + v);
    const double B = 0.5 * t * (1.0 - v);
    const double la = std::log(A), lb = std::log(B);
    return (A / (pi_sq + la * la)) * (B / (pi_sq + lb * lb));
}

double I2(int n, double v) {
    require_n(n, "I2");
    if (!(std::abs(v) < 1.0)) throw std::domain_error("I2: requires |v| < 1");
    return std::pow(1.0 - v * v, n - 3) * (1.0 - (2 * n - 3) * v * v);
}

double integral_I2(int n) {
    require_n(n, "integral_I2");
    // antiderivative v(1-v^2)^{n-2} evaluated at v = 1 and v = 0
    return n == 2 ? 1.0 : 0.0;
}

double g(double x) {
    if (!(x > 0.0)) throw std::domain_error("g: requires x > 0");
    const double L = std::log(x);
    return 1.0 / x - 2.0 * L / (x * (pi_sq + L * L));
}

double g_prime(double x) {
    if (!(x > 0.0)) throw std::domain_error("g_prime: requires x > 0");
    const double L = std::log(x);
    const double D = pi_sq + L * L;
    return -p_poly(x) / (x * x * D * D);
}

double p_poly(double x) {
    if (!(x > 0.0)) throw std::domain_error("p_poly: requires x > 0");
    const double L = std::log(x);
    const double a = L - L * L;
    const double b = L - pi_sq;
    return L * L * (2.0 * pi_sq - 4.0) + 2.0 * pi_sq + a * a + b * b;
}

LaplaceConsistency laplace_consistency(int n, double x,
                                       const quad::QuadratureConfig& cfg) {
    require_n(n, "laplace_consistency");
    if (!(x > 0.0)) throw std::domain_error("laplace_consistency: requires x > 0");

    LaplaceConsistency out;
    const double alpha = (n - 2.0) / (n - 1.0);
    const auto lhs = turan_H(TuranParams{n, alpha}, x, cfg);
    out.lhs = lhs.value;

    // inner density tolerance two decades tighter than the outer sweep
    quad::QuadratureConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol * 1e-2;
    inner.rel_tol = cfg.rel_tol * 1e-2;
    quad::QuadratureConfig outer = cfg;
    outer.abs_tol = std::max(cfg.abs_tol, 1e-10);
    outer.rel_tol = std::max(cfg.rel_tol, 1e-9);

    bool inner_ok = true;
    quad::Integrand f(
        [n, x, &inner, &inner_ok](double t) {
            const auto h = h_density(n, t, inner);
            inner_ok = inner_ok && h.converged;
            return std::exp(-x * t) * h.value;
        },
        {quad::Endpoint::lower});
    const auto rhs = quad::integrate_semi_infinite(f, 0.0, outer);
    out.rhs = rhs.value;
    out.abs_dev = std::abs(out.lhs - out.rhs);
    out.converged = lhs.converged && rhs.converged && inner_ok;
    return out;
}

double cm_ratio(int n, double x, const quad::QuadratureConfig& cfg) {
    require_n(n, "cm_ratio");
    if (!(x > 0.0)) throw std::domain_error("cm_ratio: requires x > 0");
    const double num = eval_derivative(n, x, cfg).value;
    const double den = eval_derivative(n - 1, x, cfg).value *
                       eval_derivative(n + 1, x, cfg).value;
    return num * num / den;
}

ScanReport scan_alpha(int n, const std::vector<double>& alphas,
                      const std::vector<double>& xs, int max_order,
                      const quad::QuadratureConfig& cfg) {
    require_n(n, "scan_alpha");
    if (max_order < 0) throw std::domain_error("scan_alpha: requires max_order >= 0");

    ScanReport rep;
    rep.n = n;
    rep.max_order = max_order;
    const auto bounds = alpha_bounds(n);
    for (double a : alphas)
        if (a <= bounds.sufficient || a >= bounds.necessary)
            rep.alpha_outside_open_interval = true;

    // one derivative table per x cell, assembled concurrently;
    // each slot has a single writer and is joined before aggregation
    std::vector<std::future<std::vector<ScanCell>>> slots;
    slots.reserve(xs.size());
    for (double x : xs) {
        slots.push_back(std::async(std::launch::async, [&, x] {
            const auto t = eval_range(n - 1, n + 1 + max_order, x, cfg);
            std::vector<ScanCell> cells;
            cells.reserve(alphas.size() * static_cast<std::size_t>(max_order + 1));
            for (double a : alphas) {
                for (int m = 0; m <= max_order; ++m) {
                    const auto h = assemble_H_derivative(TuranParams{n, a}, m, t);
                    const double signed_v = (m % 2 == 0 ? 1.0 : -1.0) * h.value;
                    cells.push_back(ScanCell{a, x, m, h.value, h.abs_error,
                                             signed_v > 0.0});
                }
            }
            return cells;
        }));
    }

    rep.all_alternate = true;
    for (auto& s : slots) {
        for (const auto& c : s.get()) {
            rep.all_alternate = rep.all_alternate && c.sign_ok;
            rep.cells.push_back(c);
        }
    }
    return rep;
}

}  // namespace ramanujan::turan
