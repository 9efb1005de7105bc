#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ramanujan/integral.hpp"
#include "ramanujan/turan.hpp"

using namespace ramanujan;

namespace {

constexpr double pi = 3.14159265358979323846;

}  // namespace

TEST_CASE("alpha bounds") {
    auto b2 = turan::alpha_bounds(2);
    CHECK(b2.sufficient == doctest::Approx(0.0));
    CHECK(b2.necessary == doctest::Approx(0.5));
    auto b3 = turan::alpha_bounds(3);
    CHECK(b3.sufficient == doctest::Approx(0.5));
    CHECK(b3.necessary == doctest::Approx(2.0 / 3.0));
    auto b10 = turan::alpha_bounds(10);
    CHECK(b10.sufficient == doctest::Approx(8.0 / 9.0));
    CHECK(b10.necessary == doctest::Approx(9.0 / 10.0));
    for (int n = 2; n <= 40; ++n) {
        auto b = turan::alpha_bounds(n);
        CHECK(b.sufficient < b.necessary);
    }
    CHECK_THROWS_AS((void)turan::alpha_bounds(1), const std::domain_error&);
}

TEST_CASE("turan H basic values") {
    // alpha = 0 reduces to a square
    for (double x : {0.5, 1.0, 4.0}) {
        const auto h = turan::turan_H({3, 0.0}, x);
        const double i3 = eval_derivative(3, x).value;
        CHECK(h.value == doctest::Approx(i3 * i3).epsilon(1e-12));
        CHECK(h.value > 0.0);
    }
    // the sufficient threshold keeps H non-negative
    for (double x : {0.3, 1.0, 2.0, 8.0}) {
        const auto h = turan::turan_H({3, 0.5}, x);
        CHECK(h.value >= 0.0);
    }
    // alpha <= 0 only adds a positive product for n = 2
    for (double x : {0.5, 2.0}) {
        const auto h = turan::turan_H({2, -0.5}, x);
        const double i2 = eval_derivative(2, x).value;
        CHECK(h.value >= i2 * i2);
    }
    CHECK_THROWS_AS((void)turan::turan_H({1, 0.5}, 1.0), const std::domain_error&);
    CHECK_THROWS_AS((void)turan::turan_H({3, 0.5}, 0.0), const std::domain_error&);
}

TEST_CASE("h density non-negative and anchored at zero") {
    for (int n = 2; n <= 6; ++n) {
        for (double t : {0.1, 1.0, 5.0, 20.0}) {
            const auto h = turan::h_density(n, t);
            CHECK(h.value >= -10.0 * h.error_estimate);
        }
    }
    const auto small = turan::h_density(3, 1e-4);
    CHECK(std::abs(small.value) < 1e-6);
}

TEST_CASE("h_2 equals the self-convolution of phi_2") {
    // for n = 2 the weight reduces to u and 1/(n-1) = 1, so
    // h_2 = (phi_2 * phi_2); oracle on an unrelated rule (tanh-sinh)
    for (double t : {0.5, 1.0, 5.0}) {
        quad::Integrand conv(
            [t](double u) { return density_phi(2, u) * density_phi(2, t - u); },
            {quad::Endpoint::lower, quad::Endpoint::upper});
        const auto oracle = quad::integrate_tanh_sinh(conv, 0.0, t);
        const auto h = turan::h_density(2, t);
        REQUIRE(oracle.converged);
        CHECK(std::abs(h.value - oracle.value) <=
              10.0 * (h.error_estimate + oracle.error_estimate) + 1e-12);
    }
}

TEST_CASE("symmetric reduction agrees with the direct convolution") {
    for (int n : {2, 3, 5}) {
        for (double t : {0.4, 1.0, 3.0, 12.0}) {
            const auto direct = turan::h_density(n, t);
            const auto sym = turan::h_density_symmetric(n, t);
            CHECK(std::abs(direct.value - sym.value) <=
                  10.0 * (direct.error_estimate + sym.error_estimate) +
                      1e-12 * std::abs(direct.value) + 1e-15);
        }
    }
}

TEST_CASE("split factors") {
    for (int n = 2; n <= 6; ++n) CHECK(turan::I2(n, 0.0) == doctest::Approx(1.0));
    for (int n = 2; n <= 6; ++n) {
        const double vstar = 1.0 / std::sqrt(2.0 * n - 3.0);
        if (vstar < 1.0) CHECK(std::abs(turan::I2(n, vstar)) < 1e-14);
    }
    for (int n = 3; n <= 6; ++n) {
        const double vstar = 1.0 / std::sqrt(2.0 * n - 3.0);
        CHECK(turan::I2(n, 0.5 * vstar) > 0.0);
        CHECK(turan::I2(n, 0.5 * (vstar + 1.0)) < 0.0);
    }
    CHECK_THROWS_AS((void)turan::I2(2, 1.0), const std::domain_error&);
    CHECK_THROWS_AS((void)turan::i1(1.0, 2.0), const std::domain_error&);

    // i1 inherits the monotone decrease of g
    const double t = 2.0;
    double prev = turan::i1(0.0, t);
    for (double v : {0.2, 0.5, 0.8, 0.95}) {
        const double cur = turan::i1(v, t);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("integral of I2 from the antiderivative, with quadrature oracle") {
    CHECK(turan::integral_I2(2) == doctest::Approx(1.0));
    CHECK(turan::integral_I2(3) == doctest::Approx(0.0));
    CHECK(turan::integral_I2(5) == doctest::Approx(0.0));
    for (int n = 2; n <= 8; ++n) {
        quad::Integrand f([n](double v) { return turan::I2(n, v); },
                          {quad::Endpoint::upper});
        const auto r = quad::integrate_finite(f, 0.0, 1.0);
        CHECK(std::abs(r.value - turan::integral_I2(n)) <= 1e-10);
    }
}

TEST_CASE("g lemma closed forms") {
    CHECK(turan::g(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(turan::p_poly(1.0) ==
          doctest::Approx(2.0 * pi * pi + pi * pi * pi * pi).epsilon(1e-15));
    for (double x : {0.1, 1.0, 10.0, 100.0}) CHECK(turan::g_prime(x) < 0.0);

    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> xs(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const double x = std::pow(10.0, xs(rng));
        const double h = 1e-5 * x;
        const double fd = (turan::g(x + h) - turan::g(x - h)) / (2.0 * h);
        CHECK(std::abs(fd - turan::g_prime(x)) <= 1e-7 * std::max(1.0, std::abs(turan::g_prime(x))));
        CHECK(turan::p_poly(x) > 0.0);
    }
}

TEST_CASE("laplace consistency dual route") {
    const auto r32 = turan::laplace_consistency(3, 2.0);
    REQUIRE(r32.converged);
    CHECK(r32.abs_dev <= 1e-6);
    CHECK(r32.lhs >= 0.0);

    // n = 2 at x = 1: lhs is (I'')^2 and rhs the laplace transform of
    // phi_2 * phi_2
    const auto r21 = turan::laplace_consistency(2, 1.0);
    const double i2 = eval_derivative(2, 1.0).value;
    CHECK(std::abs(r21.lhs - i2 * i2) <= 1e-12);
    CHECK(r21.abs_dev <= 1e-6);
    CHECK(r21.lhs >= 0.0);
}

TEST_CASE("cm ratio window") {
    for (int n = 2; n <= 6; ++n) {
        for (double x : {0.05, 0.7, 3.0, 900.0}) {
            const double r = turan::cm_ratio(n, x);
            CHECK(r >= (n - 2.0) / (n - 1.0) - 1e-9);
            CHECK(r <= 1.0 + 1e-9);
        }
    }
    CHECK(turan::cm_ratio(2, 1.0) >= 0.0);
}

TEST_CASE("scan: alternation inside the open interval at alpha = 0.55") {
    const auto rep = turan::scan_alpha(3, {0.55}, {0.5, 1.0, 3.0, 9.0}, 5);
    CHECK(rep.all_alternate);
    CHECK_FALSE(rep.alpha_outside_open_interval);
    CHECK(rep.label == "evidence");
    CHECK(rep.cells.size() == 4 * 6);
    for (const auto& c : rep.cells) {
        const double expected_sign = (c.order % 2 == 0) ? 1.0 : -1.0;
        CHECK(expected_sign * c.value > 0.0);
    }
}

TEST_CASE("scan: the sufficient boundary is flagged but still alternates") {
    const auto rep = turan::scan_alpha(3, {0.5}, {0.7, 2.0, 6.0}, 4);
    CHECK(rep.alpha_outside_open_interval);  // 0.5 sits on the boundary
    CHECK(rep.all_alternate);                // and the theorem still covers it
}

TEST_CASE("scan: alpha above the necessary bound loses positivity") {
    const auto rep = turan::scan_alpha(3, {0.99}, {0.5, 2.0, 8.0}, 0);
    CHECK(rep.alpha_outside_open_interval);
    CHECK_FALSE(rep.all_alternate);
    bool found = false;
    for (const auto& c : rep.cells) found = found || (!c.sign_ok && c.order == 0);
    CHECK(found);
}

TEST_CASE("derivative order 0 equals the plain assembly") {
    const auto a = turan::turan_H({4, 0.6}, 1.3);
    const auto b = turan::turan_H_derivative({4, 0.6}, 1.3, 0);
    CHECK(a.value == doctest::Approx(b.value));
}
