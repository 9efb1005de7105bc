#include "ramanujan/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "ramanujan/power_series.hpp"

namespace ramanujan::special {

namespace {

// Lanczos g = 7, n = 9 coefficients.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_lanczos(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double a = lanczos_c[0];
    for (int i = 1; i < 9; ++i) a += lanczos_c[i] / (z + i);
    const double t = z + lanczos_g + 0.5;
    constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

// zeta(k) by Euler-Maclaurin: direct sum to N plus tail corrections.
double zeta_euler_maclaurin(int k) {
    const int N = 40;
    double s = 0.0;
    for (int j = N - 1; j >= 1; --j) s += std::pow(static_cast<double>(j), -k);
    const double Nd = static_cast<double>(N);
    const double nk = std::pow(Nd, -k);
    double tail = Nd * nk / (k - 1.0)  // integral term N^(1-k)/(k-1)
                  + 0.5 * nk;
    // Bernoulli corrections B2, B4, B6, B8 with f(t) = t^-k:
    //   term_i = B_{2i}/(2i)! * k(k+1)...(k+2i-2) * N^{-(k+2i-1)}
    constexpr double b_over_fact[4] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                       -1.0 / 1209600.0};
    double rising = static_cast<double>(k);  // k, then k(k+1)(k+2), ...
    double npow = nk / Nd;                   // N^{-(k+1)}
    for (int i = 0; i < 4; ++i) {
        tail += b_over_fact[i] * rising * npow;
        rising *= static_cast<double>(k + 2 * i + 1) * (k + 2 * i + 2);
        npow /= Nd * Nd;
    }
    return s + tail;
}

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma: requires x > 0");
    if (x < 0.5) return gamma_lanczos(x + 1.0) / x;
    return gamma_lanczos(x);
}

double digamma(int n) {
    if (n < 1) throw std::domain_error("digamma: requires n >= 1");
    double h = 0.0;
    for (int j = n - 1; j >= 1; --j) h += 1.0 / j;
    return -euler_gamma + h;
}

double polygamma(int k, int n) {
    if (k < 1) throw std::domain_error("polygamma: requires k >= 1");
    if (n < 1) throw std::domain_error("polygamma: requires n >= 1");
    double s = zeta_int(k + 1);
    for (int j = 1; j < n; ++j) s -= std::pow(static_cast<double>(j), -(k + 1));
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j) kfact *= j;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
    return sign * kfact * s;
}

double zeta_int(int k) {
    if (k < 2) throw std::domain_error("zeta_int: requires k >= 2");
    // Lazily memoized table for the orders the toolkit actually uses.
    static const std::vector<double> table = [] {
        std::vector<double> t(2 + 64);
        for (int j = 2; j < static_cast<int>(t.size()); ++j)
            t[j] = zeta_euler_maclaurin(j);
        return t;
    }();
    if (k < static_cast<int>(table.size())) return table[k];
    return zeta_euler_maclaurin(k);
}

GammaTaylor gamma_taylor(int n, int K) {
    if (n < 1) throw std::domain_error("gamma_taylor: requires n >= 1");
    if (K < 0 || K > max_series_order)
        throw std::domain_error("gamma_taylor: K out of supported range [0,30]");

    // log Gamma(n+x) - log Gamma(n) = psi(n) x + sum_{k>=2} psi^(k-1)(n) x^k/k!
    std::vector<double> log_series(static_cast<std::size_t>(K) + 1, 0.0);
    if (K >= 1) log_series[1] = digamma(n);
    double kfact = 1.0;
    for (int k = 2; k <= K; ++k) {
        kfact *= k;
        log_series[static_cast<std::size_t>(k)] = polygamma(k - 1, n) / kfact;
    }
    std::vector<double> c = series::exp(log_series);
    const double gn = gamma(static_cast<double>(n));
    for (double& v : c) v *= gn;
    return GammaTaylor{n, std::move(c)};
}

}  // namespace ramanujan::special
