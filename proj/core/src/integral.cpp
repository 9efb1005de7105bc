#include "ramanujan/integral.hpp"

#include <cmath>
#include <stdexcept>

namespace ramanujan {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;
constexpr double pi_sq = pi * pi;

// w solving e^w - n w = 745 (integrand weight e^{nw - e^w} dead beyond).
double weight_cutoff(int n) {
    double w = std::log(745.0 + 40.0 * n);
    for (int i = 0; i < 3; ++i) w = std::log(745.0 + n * w);
    return w + 1.0;
}

}  // namespace

double density_phi(int n, double t) {
    if (!(t > 0.0)) throw std::domain_error("density_phi: requires t > 0");
    if (n < 0) throw std::domain_error("density_phi: requires n >= 0");
    const double L = std::log(t);
    return std::pow(t, n - 1) / (pi_sq + L * L);
}

double density_phi_derivative(int n, double t) {
    if (!(t > 0.0)) throw std::domain_error("density_phi_derivative: requires t > 0");
    if (n < 0) throw std::domain_error("density_phi_derivative: requires n >= 0");
    const double L = std::log(t);
    const double D = pi_sq + L * L;
    if (n == 0) {
        // phi_0' = -((pi^2 - 1) + (log t + 1)^2) / (t^2 (pi^2 + log^2 t)^2)
        return -((pi_sq - 1.0) + (L + 1.0) * (L + 1.0)) / (t * t * D * D);
    }
    return std::pow(t, n - 2) * ((n - 1) * D - 2.0 * L) / (D * D);
}

RamanujanEvaluation eval_derivative(const EvalRequest& req) {
    const int n = req.order;
    const double x = req.x;
    if (n < 0) throw std::domain_error("eval_derivative: requires order >= 0");
    if (!(x > 0.0)) throw std::domain_error("eval_derivative: requires x > 0");
    req.cfg.validate();

    RamanujanEvaluation out;
    out.request = req;
    const double L = std::log(x);

    if (n == 0) {
        // I_R(x) = int e^{-x e^u} / (pi^2 + u^2) du over the real line.
        // Left of -U the factor e^{-x e^u} is 1 up to x e^{-U}; that tail is
        // the arctan closed form.
        const double U = std::max(8.0, L + 34.5);  // x e^{-U} <= ~1e-15
        const double u_hi = weight_cutoff(0) - L;  // x e^u >= ~745 beyond
        // evaluate x e^u as e^{u+L} to survive extreme magnitudes
        quad::Integrand g([L](double u) {
            return std::exp(-std::exp(u + L)) / (pi_sq + u * u);
        });
        auto r = quad::integrate_finite(g, -U, u_hi, req.cfg);
        const double tail = (1.0 / pi) * (pi / 2.0 - std::atan(U / pi));
        const double tail_err = std::exp(L - U) / pi_sq;
        out.value = r.value + tail;
        out.abs_error = r.error_estimate + tail_err;
        out.evaluations = r.evaluations;
        out.converged = r.converged;
        return out;
    }

    // n >= 1: recentred w-domain form, value = (-1)^n x^{-n} A with
    //   A = int e^{n w - e^w} / (pi^2 + (w - L)^2) dw.
    const double w_lo = std::min(0.0, L) - 60.0 / n;
    const double w_hi = weight_cutoff(n);
    quad::Integrand g([n, L](double w) {
        return std::exp(n * w - std::exp(w)) / (pi_sq + (w - L) * (w - L));
    });
    auto r = quad::integrate_finite(g, w_lo, w_hi, req.cfg);
    const double tail_err = std::exp(static_cast<double>(n) * w_lo) / (n * pi_sq);
    const double scale = std::exp(-static_cast<double>(n) * L);  // x^{-n}
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    out.value = sign * scale * r.value;
    out.abs_error = scale * (r.error_estimate + tail_err);
    out.evaluations = r.evaluations;
    out.converged = r.converged;
    return out;
}

RamanujanEvaluation eval_derivative(int n, double x,
                                    const quad::QuadratureConfig& cfg) {
    return eval_derivative(EvalRequest{n, x, cfg});
}

quad::QuadratureResult eval_antiderivative(double x,
                                           const quad::QuadratureConfig& cfg) {
    if (!(x > 0.0)) throw std::domain_error("eval_antiderivative: requires x > 0");
    cfg.validate();
    const double L = std::log(x);

    // I~(x) = int_0^x I_R = int_0^inf (1 - e^{-xt}) phi_0(t)/t dt, which in
    // the u = log t domain is int (1 - e^{-x e^u}) e^{-u} / (pi^2 + u^2) du.
    // Left of -U the numerator is x e^u + O((x e^u)^2), so the integrand is
    // the constant-x lorentzian whose tail is the arctan closed form; right
    // of u_R the e^{-u} factor has decayed below e^{-40}.
    const double U = 36.0 + std::max(0.0, L);
    const double u_R = 40.0 + std::max(0.0, -L);
    quad::Integrand g([L](double u) {
        return -std::expm1(-std::exp(u + L)) * std::exp(-u) / (pi_sq + u * u);
    });
    auto r = quad::integrate_finite(g, -U, u_R, cfg);
    const double tail = x * (1.0 / pi) * (pi / 2.0 - std::atan(U / pi));
    r.value += tail;
    r.error_estimate += x * x * std::exp(-U) / (2.0 * pi_sq) + std::exp(-u_R) / pi_sq;
    return r;
}

quad::QuadratureResult bernstein_certificate(const quad::QuadratureConfig& cfg) {
    quad::Integrand f([](double u) {
        return 1.0 / ((1.0 + std::exp(u)) * (pi_sq + u * u));
    });
    return quad::integrate_real_line(f, cfg);
}

}  // namespace ramanujan
