// Adaptive quadrature contract, chunked oscillatory integration,
// Gauss-Legendre rule generation, and alternating-series acceleration.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "dipdec/quadrature.hpp"

using namespace dipdec;

TEST_CASE("adaptive quadrature reproduces elementary integrals") {
    CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                             std::numbers::pi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x); }, 0.0,
                             40.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("adaptive quadrature degenerate and invalid ranges") {
    CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 1.0, 0.0),
                    std::domain_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 0.0, inf),
                    std::domain_error);
}

TEST_CASE("adaptive quadrature handles extreme absolute scales") {
    // A normalized Gaussian-like density living on a ~1e-23-wide interval
    // with pointwise values ~1e24.  The result must come back as 1 and the
    // convergence contract must judge the error in the integral's own
    // units, not the integrand's: this is the regression for the
    // narrow-interval error-estimate inflation fixed in the core.
    const double s = 1.284e-48;  // width-squared scale
    const double norm = std::pow(std::numbers::pi * s, -1.5);
    auto pdf = [&](double p) {
        return 4.0 * std::numbers::pi * p * p * norm * std::exp(-p * p / s);
    };
    const double upper = 11.0 * std::sqrt(8.0 * s / (2.0 * std::numbers::pi));
    CHECK(integrate_adaptive(pdf, 0.0, upper) ==
          doctest::Approx(1.0).epsilon(1e-10));

    // Mirror case: a huge interval with tiny values.
    CHECK(integrate_adaptive([](double x) { return std::exp(-x / 1e20); },
                             0.0, 1e22) ==
          doctest::Approx(1e20).epsilon(1e-8));
}

TEST_CASE("chunked integration agrees with single-interval integration") {
    auto f = [](double x) { return std::exp(-0.3 * x) * std::cos(x); };
    const double whole = integrate_adaptive(f, 0.0, 30.0);
    const double chunked =
        integrate_chunked(f, 0.0, 30.0, std::numbers::pi);
    CHECK(chunked == doctest::Approx(whole).epsilon(1e-10));
}

TEST_CASE("chunked integration judges convergence on the aggregate") {
    // exp(-x) over [0, 60] in pi-wide chunks: the far chunks are ~1e-26 of
    // the total, far below the integrand's noise floor.  The aggregate
    // contract must not reject them for failing a per-chunk relative test.
    const double v = integrate_chunked(
        [](double x) { return std::exp(-x); }, 0.0, 60.0, std::numbers::pi);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("chunked integration input validation") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_chunked(one, 0.0, 1.0, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(integrate_chunked(one, 0.0, 1.0, -1.0),
                    std::domain_error);
    CHECK(integrate_chunked(one, 1.0, 1.0, 0.5) == 0.0);
    CHECK(integrate_chunked(one, 2.0, 1.0, 0.5) == 0.0);
}

TEST_CASE("gauss-legendre rule matches known low orders") {
    CHECK_THROWS_AS(gauss_legendre_rule(1), std::domain_error);

    const GaussLegendreRule r2 = gauss_legendre_rule(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

    const GaussLegendreRule r3 = gauss_legendre_rule(3);
    CHECK(r3.nodes[1] == 0.0);
    CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-14));
    CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(r3.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("gauss-legendre rule is exact for polynomials of degree 2n-1") {
    const GaussLegendreRule r = gauss_legendre_rule(6);
    double sum_w = 0.0;
    double integral_x10 = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        sum_w += r.weights[i];
        integral_x10 += r.weights[i] * std::pow(r.nodes[i], 10);
    }
    CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
    // deg 10 <= 2*6-1: exact.
    CHECK(integral_x10 == doctest::Approx(2.0 / 11.0).epsilon(1e-13));

    // Symmetry at a high order used by the nested rate evaluation.
    const GaussLegendreRule big = gauss_legendre_rule(64);
    for (int i = 0; i < 32; ++i) {
        CHECK(big.nodes[i] == doctest::Approx(-big.nodes[63 - i]).epsilon(1e-14));
        CHECK(big.weights[i] ==
              doctest::Approx(big.weights[63 - i]).epsilon(1e-14));
    }
}

TEST_CASE("alternating-series acceleration beats raw partial sums") {
    CHECK(accelerate_alternating_sum({}) == 0.0);

    // ln 2 from the alternating harmonic series: 30 raw terms carry an
    // O(1/30) truncation error; the averaged triangle gets ~1e-10.
    std::vector<double> terms;
    for (int k = 1; k <= 30; ++k)
        terms.push_back((k % 2 ? 1.0 : -1.0) / k);
    CHECK(accelerate_alternating_sum(terms) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-9));

    // pi/4 from the Leibniz series.
    terms.clear();
    for (int k = 0; k < 30; ++k)
        terms.push_back((k % 2 ? -1.0 : 1.0) / (2 * k + 1));
    CHECK(accelerate_alternating_sum(terms) ==
          doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-9));
}
