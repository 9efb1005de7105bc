#include "ramanujan/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ramanujan/integral.hpp"
#include "ramanujan/power_series.hpp"
#include "ramanujan/special.hpp"

namespace ramanujan::asym {

namespace {

// Taylor series of sin(a s)/a (odd orders) or sin(a s)/(a s) (even orders).
std::vector<double> sinc_series(double a, int K, bool divided_by_s) {
    std::vector<double> s(static_cast<std::size_t>(K) + 1, 0.0);
    double term = 1.0;  // a^{2m} / (2m+1)!, m = 0
    for (int m = 0;; ++m) {
        const int j = divided_by_s ? 2 * m : 2 * m + 1;
        if (j > K) break;
        s[static_cast<std::size_t>(j)] = (m % 2 == 0 ? term : -term);
        term *= a * a / ((2 * m + 2) * (2 * m + 3));
    }
    return s;
}

std::vector<double> expansion_terms(const AsymptoticCoefficients& c, double x,
                                    int K) {
    const double L = std::log(x);
    std::vector<double> t(static_cast<std::size_t>(K) + 1, 0.0);
    double kfact = 1.0;
    double Lpow = L;  // L^{k+1}
    for (int k = 0; k <= K; ++k) {
        if (k > 0) kfact *= k;
        t[static_cast<std::size_t>(k)] = kfact * c.coeffs[static_cast<std::size_t>(k)] / Lpow;
        Lpow *= L;
    }
    return t;
}

}  // namespace

AsymptoticCoefficients phi_coefficients(double a, int n, int K) {
    if (!(a > 0.0)) throw std::domain_error("phi_coefficients: requires a > 0");
    if (n < 0) throw std::domain_error("phi_coefficients: requires n >= 0");
    if (K < 0 || K > special::max_series_order)
        throw std::domain_error("phi_coefficients: K out of supported range [0,30]");

    // n >= 1: sin(as)/a * Gamma(n+s).
    // n  = 0: sin(as)/(as) * Gamma(1+s), cancelling the Gamma pole.
    const auto gt = special::gamma_taylor(n >= 1 ? n : 1, K);
    const auto sc = sinc_series(a, K, /*divided_by_s=*/n == 0);
    return AsymptoticCoefficients{a, n, series::multiply(sc, gt.coeffs, K)};
}

double eval_expansion(const AsymptoticCoefficients& c, double x, int K) {
    if (!(x > 1.0)) throw std::domain_error("eval_expansion: requires x > 1");
    const int kmax = static_cast<int>(c.coeffs.size()) - 1;
    if (K < 0) K = kmax;
    if (K > kmax) throw std::domain_error("eval_expansion: K beyond generated coefficients");
    const auto terms = expansion_terms(c, x, K);
    double s = 0.0;
    for (int k = K; k >= 0; --k) s += terms[static_cast<std::size_t>(k)];
    return std::pow(x, -c.n) * s;
}

double eval_expansion(int n, double x, int K, double a) {
    return eval_expansion(phi_coefficients(a, n, K), x, K);
}

ComparisonRecord compare(int n, double x, int K,
                         const quad::QuadratureConfig& cfg, double a) {
    if (!(x > 1.0)) throw std::domain_error("compare: requires x > 1");
    if (K < 0 || K + 1 > special::max_series_order)
        throw std::domain_error("compare: K out of supported range");

    ComparisonRecord rec;
    const auto c = phi_coefficients(a, n, K + 1);
    const auto terms = expansion_terms(c, x, K + 1);

    // Optimal-truncation guard: refuse K past the smallest nonzero term.
    int smallest = -1;
    for (int k = 0; k <= K + 1; ++k) {
        const double m = std::abs(terms[static_cast<std::size_t>(k)]);
        if (m == 0.0) continue;
        if (smallest < 0 || m < std::abs(terms[static_cast<std::size_t>(smallest)]))
            smallest = k;
    }
    if (smallest >= 0 && K > smallest) {
        rec.truncation_ok = false;
        rec.expansion = std::numeric_limits<double>::quiet_NaN();
        rec.rel_dev = std::numeric_limits<double>::quiet_NaN();
        rec.next_term_ratio = std::numeric_limits<double>::quiet_NaN();
        return rec;
    }

    double sum = 0.0;
    for (int k = K; k >= 0; --k) sum += terms[static_cast<std::size_t>(k)];
    const double scale = std::pow(x, -n);
    rec.expansion = scale * sum;
    rec.next_term_ratio =
        (sum != 0.0) ? std::abs(terms[static_cast<std::size_t>(K + 1)] / sum)
                     : std::numeric_limits<double>::infinity();

    const auto ev = eval_derivative(n, x, cfg);
    rec.converged = ev.converged;
    rec.quadrature = std::abs(ev.value);  // (-1)^n I^(n)(x) > 0
    rec.rel_dev = std::abs(rec.quadrature - rec.expansion) / std::abs(rec.quadrature);
    return rec;
}

}  // namespace ramanujan::asym
