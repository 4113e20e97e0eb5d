// Form-factor kernel, cosine integral (both branches and the quadrature
// oracle), and the momentum-distribution expectation machinery.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "dipdec/quantities.hpp"
#include "dipdec/special.hpp"

using namespace dipdec;

TEST_CASE("form-factor kernel matches reference values on both branches") {
    // Series branch (x below the 0.5 switchover).
    CHECK(form_factor_kernel(0.05) ==
          doctest::Approx(4.1656250930016467e-5).epsilon(1e-12));
    // Direct branch.
    CHECK(form_factor_kernel(1.0) ==
          doctest::Approx(0.30116867893975679).epsilon(1e-12));
    CHECK(form_factor_kernel(10.0) ==
          doctest::Approx(7.8466941798751547).epsilon(1e-12));
    CHECK(form_factor_kernel(100.0) ==
          doctest::Approx(-86.738252869878152).epsilon(1e-12));
    // sin(pi) = 0, so k(pi) = pi exactly.
    CHECK(form_factor_kernel(std::numbers::pi) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-14));
    // Deep series regime against the leading Taylor terms.
    const double x = 1e-4;
    const double taylor =
        x * x * x / 3.0 - std::pow(x, 5) / 30.0 + std::pow(x, 7) / 840.0;
    CHECK(form_factor_kernel(x) == doctest::Approx(taylor).epsilon(1e-12));

    CHECK(form_factor_kernel(0.0) == 0.0);
    CHECK_THROWS_AS(form_factor_kernel(-0.1), std::domain_error);
}

TEST_CASE("form-factor kernel branches agree at the switchover") {
    const double x = detail::kernel_series_switch;
    CHECK(detail::form_factor_kernel_series(x) ==
          doctest::Approx(detail::form_factor_kernel_direct(x))
              .epsilon(1e-12));
    CHECK(form_factor_kernel(0.5) ==
          doctest::Approx(0.040634257659016642).epsilon(1e-12));
}

TEST_CASE("kernel over x cubed is continuous through zero") {
    CHECK(form_factor_kernel_over_x3(0.0) == doctest::Approx(1.0 / 3.0));
    CHECK(form_factor_kernel_over_x3(1e-8) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // Consistency with the kernel itself at moderate argument.
    CHECK(form_factor_kernel_over_x3(2.0) ==
          doctest::Approx(form_factor_kernel(2.0) / 8.0).epsilon(1e-12));
    CHECK_THROWS_AS(form_factor_kernel_over_x3(-1.0), std::domain_error);
}

TEST_CASE("one minus sinc keeps relative accuracy near zero") {
    CHECK(one_minus_sinc(0.0) == 0.0);
    const double x = 1e-4;
    const double taylor = x * x / 6.0 - std::pow(x, 4) / 120.0;
    CHECK(one_minus_sinc(x) == doctest::Approx(taylor).epsilon(1e-10));
    CHECK(one_minus_sinc(std::numbers::pi) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one_minus_sinc(20.0) ==
          doctest::Approx(1.0 - std::sin(20.0) / 20.0).epsilon(1e-14));
}

TEST_CASE("cosine integral reproduces reference values to 1e-10 absolute") {
    const std::vector<std::pair<double, double>> table = {
        {1e-6, -13.238294893062991},
        {1e-3, -6.3305398640805938},
        {0.01, -4.0279795209823921},
        {0.1, -1.7278683866572966},
        {0.5, -0.1777840788066129},
        {1.0, 0.33740392290096813},
        {2.0, 0.422980828774865},
        {5.0, -0.19002974965664388},
        {10.0, -0.045456433004455373},
        {15.0, 0.04627867767436044},
        {18.0, -0.043475102999501005},
        {19.0, 0.0051503710084261286},
        {20.0, 0.044419820845353317},
        {21.0, 0.04089050015469237},
        {22.0, 0.0016406919157377497},
        {22.5, -0.019863230011267784},
        {22.9, -0.03315767387050776},
        {23.0, -0.035659860382261683},
        {23.1, -0.037784380619286579},
        {23.5, -0.042210019706555362},
        {24.0, -0.038333015551247148},
        {25.0, -0.0068485971797025909},
        {26.0, 0.028295151031757132},
        {28.0, 0.010869534308760866},
        {30.0, -0.033032417282071144},
        {50.0, -0.0056283863241163054},
        {100.0, -0.0051488251426104921},
        {200.0, -0.0043784460930278257},
        {1e3, 0.00082631551109068228},
        {1e4, -3.0551916724485213e-5},
        {1e5, 3.5758791572935136e-7},
        {1e6, -3.4999443892272049e-7},
    };
    for (const auto& [x, want] : table) {
        INFO("x = ", x);
        CHECK(std::abs(cosine_integral(x) - want) < 1e-10);
    }
    // First positive zero.
    CHECK(std::abs(cosine_integral(0.61650548562071623)) < 1e-12);
    CHECK_THROWS_AS(cosine_integral(0.0), std::domain_error);
    CHECK_THROWS_AS(cosine_integral(-1.0), std::domain_error);
}

TEST_CASE("cosine integral branches agree at the switchover") {
    const double x = detail::ci_branch_switch;
    CHECK(std::abs(detail::cosine_integral_series(x) -
                   detail::cosine_integral_asymptotic(x)) < 2e-10);
}

TEST_CASE("cosine integral agrees with its quadrature oracle") {
    for (const double x : {0.5, 2.0, 20.0, 200.0}) {
        INFO("x = ", x);
        CHECK(std::abs(cosine_integral(x) - cosine_integral_quadrature(x)) <
              1e-9);
    }
    CHECK_THROWS_AS(cosine_integral_quadrature(0.0), std::domain_error);
}

TEST_CASE("momentum distribution factories validate their inputs") {
    CHECK_THROWS_AS(MomentumDistribution::delta_at_mean(0.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(MomentumDistribution::delta_at_mean(1e-27, -1.0),
                    std::domain_error);
    CHECK_THROWS_AS(MomentumDistribution::maxwell_boltzmann(0.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(MomentumDistribution::maxwell_boltzmann(1e-27, 0.0),
                    std::domain_error);
    // A delta at zero temperature is legitimate (zero momentum).
    CHECK(MomentumDistribution::delta_at_mean(1e-27, 0.0).mean_momentum() ==
          0.0);
}

TEST_CASE("mean momentum matches the thermal momentum scale") {
    const auto mb = MomentumDistribution::maxwell_boltzmann(4.65e-26, 1.0);
    CHECK(mb.mean_momentum() ==
          doctest::Approx(mean_thermal_momentum(4.65e-26, 1.0).value())
              .epsilon(1e-14));
}

TEST_CASE("pointwise density exists only for the thermal distribution") {
    const auto mb = MomentumDistribution::maxwell_boltzmann(4.65e-26, 1.0);
    const auto delta = MomentumDistribution::delta_at_mean(4.65e-26, 1.0);
    CHECK(momentum_pdf(mb, mb.mean_momentum()) > 0.0);
    CHECK_THROWS_AS(momentum_pdf(delta, 1e-24), UnsupportedOperationError);
    CHECK_THROWS_AS(momentum_pdf(mb, -1e-24), std::domain_error);
}

TEST_CASE("delta expectation sifts the mean momentum") {
    const auto delta = MomentumDistribution::delta_at_mean(1e-27, 1.0);
    const double p_bar = delta.mean_momentum();
    CHECK(expectation_over_momentum(delta, [](double p) { return p * p; }) ==
          doctest::Approx(p_bar * p_bar).epsilon(1e-14));
}

TEST_CASE("thermal expectation reproduces the analytic moments") {
    const auto mb = MomentumDistribution::maxwell_boltzmann(4.65e-26, 1.0);
    const double p_bar = mb.mean_momentum();

    CHECK(expectation_over_momentum(mb, [](double) { return 1.0; }) ==
          doctest::Approx(1.0).epsilon(1e-10));
    // <p> = (2/sqrt(pi)) p_bar for the speed distribution.
    CHECK(expectation_over_momentum(mb, [](double p) { return p; }) ==
          doctest::Approx(2.0 / std::sqrt(std::numbers::pi) * p_bar)
              .epsilon(1e-9));
    // <p^2> = (3/2) p_bar^2.
    CHECK(expectation_over_momentum(mb, [](double p) { return p * p; }) ==
          doctest::Approx(1.5 * p_bar * p_bar).epsilon(1e-9));
}

TEST_CASE("non-finite integrand values are rejected with a numeric error") {
    const auto mb = MomentumDistribution::maxwell_boltzmann(4.65e-26, 1.0);
    const auto delta = MomentumDistribution::delta_at_mean(4.65e-26, 1.0);
    auto bad = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(expectation_over_momentum(mb, bad), NumericError);
    CHECK_THROWS_AS(expectation_over_momentum(delta, bad), NumericError);
}
