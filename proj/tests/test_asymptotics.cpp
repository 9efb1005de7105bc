#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ramanujan/asymptotics.hpp"
#include "ramanujan/power_series.hpp"
#include "ramanujan/special.hpp"

using namespace ramanujan;
using special::euler_gamma;

namespace {

constexpr double pi = 3.14159265358979323846;

}  // namespace

TEST_CASE("coefficient closed forms for n = 1..10") {
    for (int n = 1; n <= 10; ++n) {
        const auto c = asym::phi_coefficients(pi, n, 2);
        const double gn = special::gamma(n);
        const double psin = special::digamma(n);
        CHECK(std::abs(c.coeffs[0]) <= 1e-14);
        CHECK(std::abs(c.coeffs[1] - gn) <= 1e-12 * gn);
        CHECK(std::abs(c.coeffs[2] - gn * psin) <= 1e-12 * std::abs(gn * psin));
    }
}

TEST_CASE("n = 0 pole cancellation against a series oracle") {
    // oracle: multiply the leading series of sin(pi s)/(pi s) and
    // Gamma(1+s) by hand; independent of gamma_taylor
    const double s2 = -pi * pi / 6.0;                                // sinc: 1 + s2 x^2
    const double g1 = -euler_gamma;                                  // Gamma(1+x): 1 + g1 x + g2 x^2
    const double g2 = euler_gamma * euler_gamma / 2.0 + pi * pi / 12.0;
    const auto c = asym::phi_coefficients(pi, 0, 2);
    CHECK(c.coeffs[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.coeffs[1] == doctest::Approx(g1).epsilon(1e-13));
    CHECK(c.coeffs[2] == doctest::Approx(g2 + s2).epsilon(1e-12));
}

TEST_CASE("phi_1 of n = 3 is gamma(3)") {
    const auto c = asym::phi_coefficients(pi, 3, 1);
    CHECK(c.coeffs[1] == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("generating-function reconstruction at x = 0.05") {
    for (int n = 1; n <= 6; ++n) {
        const auto c = asym::phi_coefficients(pi, n, 20);
        const double x = 0.05;
        const double rebuilt = series::evaluate(c.coeffs, x);
        const double truth = std::sin(pi * x) / pi * special::gamma(n + x);
        CHECK(std::abs(rebuilt - truth) <= 1e-10 * std::abs(truth));
    }
}

TEST_CASE("coefficient domain errors") {
    CHECK_THROWS_AS((void)asym::phi_coefficients(0.0, 1, 2), const std::domain_error&);
    CHECK_THROWS_AS((void)asym::phi_coefficients(pi, -1, 2), const std::domain_error&);
    CHECK_THROWS_AS((void)asym::phi_coefficients(pi, 1, 31), const std::domain_error&);
}

TEST_CASE("expansion partial sums at the stated points") {
    // n=1, K=1, x=e^10: only the k = 1 term survives and 0! = 1! = 1
    const double e10 = std::exp(10.0);
    CHECK(asym::eval_expansion(1, e10, 1) ==
          doctest::Approx(std::exp(-10.0) * 0.01).epsilon(1e-13));

    // n=0, K=2, x=e^20: 1/20 - gamma/400 plus the k = 2 term 2! Phi_2 / 20^3
    const auto c0 = asym::phi_coefficients(pi, 0, 2);
    const double expect = 1.0 / 20.0 - euler_gamma / 400.0 + 2.0 * c0.coeffs[2] / 8000.0;
    CHECK(asym::eval_expansion(0, std::exp(20.0), 2) ==
          doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("expansion domain") {
    CHECK_THROWS_AS((void)asym::eval_expansion(1, 1.0, 1), const std::domain_error&);
    CHECK_THROWS_AS((void)asym::eval_expansion(1, 0.5, 1), const std::domain_error&);
    const auto c = asym::phi_coefficients(pi, 1, 3);
    CHECK_THROWS_AS((void)asym::eval_expansion(c, 10.0, 5), const std::domain_error&);
}

TEST_CASE("compare: deviation shrinks as x grows") {
    for (int n = 1; n <= 3; ++n) {
        const auto near = asym::compare(n, std::exp(10.0), 2);
        const auto far = asym::compare(n, std::exp(20.0), 2);
        REQUIRE(near.converged);
        REQUIRE(far.converged);
        CHECK(far.rel_dev < near.rel_dev);
    }
}

TEST_CASE("compare: K = 0 sum is empty for n >= 1") {
    const auto rec = asym::compare(1, std::exp(15.0), 0);
    CHECK(rec.truncation_ok);
    CHECK(rec.expansion == 0.0);
    CHECK(rec.rel_dev == doctest::Approx(1.0));
}

TEST_CASE("compare: next-term bound holds at n = 1, x = e^20, K = 2") {
    const auto rec = asym::compare(1, std::exp(20.0), 2);
    REQUIRE(rec.converged);
    CHECK(rec.rel_dev < rec.next_term_ratio);
}

TEST_CASE("compare: optimal-truncation guard refuses past the smallest term") {
    // at x = e^2 the factorially growing terms start diverging almost
    // immediately; K = 6 lies past the smallest term
    const auto rec = asym::compare(2, std::exp(2.0), 6);
    CHECK_FALSE(rec.truncation_ok);
    CHECK(std::isnan(rec.expansion));
}

TEST_CASE("expansion term magnitudes are the watson terms") {
    // the k-th term of the evaluated expansion must equal k! Phi_k / L^{k+1}
    const int n = 2;
    const double x = std::exp(12.0);
    const auto c = asym::phi_coefficients(pi, n, 3);
    const double L = 12.0;
    double sum = 0.0;
    double kfact = 1.0;
    for (int k = 0; k <= 3; ++k) {
        if (k > 0) kfact *= k;
        sum += kfact * c.coeffs[static_cast<std::size_t>(k)] / std::pow(L, k + 1);
    }
    CHECK(asym::eval_expansion(c, x, 3) ==
          doctest::Approx(std::pow(x, -n) * sum).epsilon(1e-14));
}
