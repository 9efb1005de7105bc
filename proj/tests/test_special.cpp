#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ramanujan/power_series.hpp"
#include "ramanujan/special.hpp"

using namespace ramanujan;
using special::euler_gamma;

namespace {

constexpr double pi = 3.14159265358979323846;

// independent zeta(3) oracle: direct summation with an Euler-Maclaurin
// tail bound, nothing shared with the implementation's table
double zeta3_oracle() {
    const int N = 100000;
    double s = 0.0;
    for (int j = N; j >= 1; --j) s += 1.0 / (static_cast<double>(j) * j * j);
    const double Nd = N;
    return s + 1.0 / (2.0 * Nd * Nd) - 1.0 / (2.0 * Nd * Nd * Nd);
}

}  // namespace

TEST_CASE("gamma at the stated points") {
    CHECK(special::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(special::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(special::gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK_THROWS_AS((void)special::gamma(0.0), const std::domain_error&);
    CHECK_THROWS_AS((void)special::gamma(-2.0), const std::domain_error&);
}

TEST_CASE("gamma against the standard function") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xs(0.05, 30.0);
    for (int i = 0; i < 200; ++i) {
        const double x = xs(rng);
        const double ref = std::tgamma(x);
        CHECK(std::abs(special::gamma(x) - ref) <= 1e-13 * std::abs(ref));
    }
}

TEST_CASE("gamma recurrence property") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(0.01, 19.0);
    for (int i = 0; i < 100; ++i) {
        const double x = xs(rng);
        const double lhs = special::gamma(x + 1.0);
        const double rhs = x * special::gamma(x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("digamma harmonic values") {
    CHECK(special::digamma(1) == doctest::Approx(-euler_gamma).epsilon(1e-14));
    CHECK(special::digamma(2) == doctest::Approx(1.0 - euler_gamma).epsilon(1e-14));
    CHECK(special::digamma(4) == doctest::Approx(11.0 / 6.0 - euler_gamma).epsilon(1e-14));
    CHECK_THROWS_AS((void)special::digamma(0), const std::domain_error&);
    for (int n = 1; n <= 50; ++n) {
        const double diff = special::digamma(n + 1) - special::digamma(n);
        CHECK(std::abs(diff - 1.0 / n) <= 1e-13);
    }
}

TEST_CASE("polygamma at positive integers") {
    CHECK(special::polygamma(1, 1) == doctest::Approx(pi * pi / 6.0).epsilon(1e-13));
    CHECK(special::polygamma(2, 1) ==
          doctest::Approx(-2.0 * special::zeta_int(3)).epsilon(1e-13));
    CHECK(special::polygamma(1, 2) == doctest::Approx(pi * pi / 6.0 - 1.0).epsilon(1e-13));
    CHECK_THROWS_AS((void)special::polygamma(0, 1), const std::domain_error&);
    CHECK_THROWS_AS((void)special::polygamma(1, 0), const std::domain_error&);
}

TEST_CASE("integer zeta values") {
    CHECK(special::zeta_int(2) == doctest::Approx(pi * pi / 6.0).epsilon(1e-14));
    CHECK(special::zeta_int(4) ==
          doctest::Approx(pi * pi * pi * pi / 90.0).epsilon(1e-14));
    CHECK(special::zeta_int(3) == doctest::Approx(zeta3_oracle()).epsilon(1e-13));
    CHECK(special::zeta_int(40) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK_THROWS_AS((void)special::zeta_int(1), const std::domain_error&);
}

TEST_CASE("gamma taylor leading coefficients") {
    auto t1 = special::gamma_taylor(1, 1);
    CHECK(t1.coeffs[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t1.coeffs[1] == doctest::Approx(-euler_gamma).epsilon(1e-13));

    auto t3 = special::gamma_taylor(3, 1);
    CHECK(t3.coeffs[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(t3.coeffs[1] == doctest::Approx(2.0 * (1.5 - euler_gamma)).epsilon(1e-13));
}

TEST_CASE("gamma taylor against a finite-difference oracle") {
    // independent oracle: central stencils of the standard tgamma on a
    // long-double grid, two Richardson levels (O(h^2) -> O(h^6)).  The
    // wide type keeps the k = 4 stencil above the cancellation floor.
    auto f = [](long double x) { return std::tgamma(2.0L + x); };
    auto stencil = [&](int k, long double hh) -> long double {
        switch (k) {
            case 1: return (f(hh) - f(-hh)) / (2.0L * hh);
            case 2: return (f(hh) - 2.0L * f(0.0L) + f(-hh)) / (hh * hh);
            case 3:
                return (f(2 * hh) - 2.0L * f(hh) + 2.0L * f(-hh) - f(-2 * hh)) /
                       (2.0L * hh * hh * hh);
            default:
                return (f(2 * hh) - 4.0L * f(hh) + 6.0L * f(0.0L) - 4.0L * f(-hh) +
                        f(-2 * hh)) /
                       (hh * hh * hh * hh);
        }
    };
    auto refine = [&](int k) -> double {
        const long double h = 0.02L;
        const long double d0 = stencil(k, h);
        const long double d1 = stencil(k, h / 2.0L);
        const long double d2 = stencil(k, h / 4.0L);
        const long double r0 = (4.0L * d1 - d0) / 3.0L;
        const long double r1 = (4.0L * d2 - d1) / 3.0L;
        return static_cast<double>((16.0L * r1 - r0) / 15.0L);
    };

    const auto t = special::gamma_taylor(2, 4);
    CHECK(std::abs(t.coeffs[0] - 1.0) <= 1e-12);
    double fact = 1.0;
    for (int k = 1; k <= 4; ++k) {
        fact *= k;
        CHECK(std::abs(t.coeffs[static_cast<std::size_t>(k)] - refine(k) / fact) <= 1e-8);
    }
}

TEST_CASE("gamma taylor partial sums track gamma(n + 0.1)") {
    for (int n = 1; n <= 10; ++n) {
        const auto t = special::gamma_taylor(n, 20);
        const double approx = series::evaluate(t.coeffs, 0.1);
        const double truth = special::gamma(n + 0.1);
        CHECK(std::abs(approx - truth) <= 1e-10 * std::abs(truth));
    }
}

TEST_CASE("gamma taylor domain") {
    CHECK_THROWS_AS((void)special::gamma_taylor(0, 3), const std::domain_error&);
    CHECK_THROWS_AS((void)special::gamma_taylor(2, 31), const std::domain_error&);
    CHECK_THROWS_AS((void)special::gamma_taylor(2, -1), const std::domain_error&);
    CHECK(special::gamma_taylor(2, 0).coeffs.size() == 1);
}

TEST_CASE("power series exp recurrence") {
    // exp(x) itself: a = [0,1,0,...] -> b_k = 1/k!
    std::vector<double> a(8, 0.0);
    a[1] = 1.0;
    const auto b = series::exp(a);
    double fact = 1.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        CHECK(b[k] == doctest::Approx(1.0 / fact).epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)series::exp(std::vector<double>{1.0, 2.0}),
                    const std::invalid_argument&);
}

TEST_CASE("power series multiply truncates") {
    // (1+x)(1-x+x^2) = 1 + x^3 -> truncated at K=2: 1
    const auto c = series::multiply({1.0, 1.0}, {1.0, -1.0, 1.0}, 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == doctest::Approx(1.0));
    CHECK(c[1] == doctest::Approx(0.0));
    CHECK(c[2] == doctest::Approx(0.0));
}
