// Unit-tagged arithmetic, physical constants, and gas-state conversions.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dipdec/quantities.hpp"

using namespace dipdec;

TEST_CASE("quantity addition and subtraction demand matching dimensions") {
    const Quantity a{2.0, dim_length};
    const Quantity b{3.0, dim_length};
    CHECK((a + b).value() == doctest::Approx(5.0));
    CHECK((b - a).value() == doctest::Approx(1.0));
    CHECK((a + b).dimension() == dim_length);

    const Quantity t{1.0, dim_time};
    CHECK_THROWS_AS(a + t, DimensionError);
    CHECK_THROWS_AS(a - t, DimensionError);
}

TEST_CASE("quantity multiplication and division combine exponents") {
    const Quantity len{4.0, dim_length};
    const Quantity t{2.0, dim_time};
    const Quantity v = len / t;
    CHECK(v.value() == doctest::Approx(2.0));
    CHECK(v.dimension() == Dimension{0, 1, -1, 0, 0});

    const Quantity area = len * len;
    CHECK(area.value() == doctest::Approx(16.0));
    CHECK(area.dimension() == dim_area);

    CHECK((len * 2.0).value() == doctest::Approx(8.0));
    CHECK((3.0 * len).value() == doctest::Approx(12.0));
    CHECK((len / 4.0).value() == doctest::Approx(1.0));
    CHECK((len / len).is_dimensionless());
}

TEST_CASE("quantity sqrt requires even exponents") {
    const Quantity area{9.0, dim_area};
    const Quantity side = area.sqrt();
    CHECK(side.value() == doctest::Approx(3.0));
    CHECK(side.dimension() == dim_length);

    const Quantity len{4.0, dim_length};
    CHECK_THROWS_AS(len.sqrt(), DimensionError);
}

TEST_CASE("quantity integer powers, including negative") {
    const Quantity len{2.0, dim_length};
    CHECK(len.pow(3).value() == doctest::Approx(8.0));
    CHECK(len.pow(3).dimension() == Dimension{0, 3, 0, 0, 0});
    CHECK(len.pow(-2).value() == doctest::Approx(0.25));
    CHECK(len.pow(-2).dimension() == Dimension{0, -2, 0, 0, 0});
    CHECK(len.pow(0).is_dimensionless());
}

TEST_CASE("dimension rendering names base units with exponents") {
    CHECK(dimension_to_string(dim_less) == "1");
    CHECK(dimension_to_string(dim_momentum) == "kg·m·s^-1");
    CHECK(dimension_to_string(dim_inverse_volume) == "m^-3");
}

TEST_CASE("physical constants carry the expected values") {
    CHECK(si.hbar == 1.054571817e-34);
    CHECK(si.k_B == 1.380649e-23);
    CHECK(si.eps0 == 8.8541878128e-12);
    CHECK(si.e_charge == 1.602176634e-19);
    // Conventional rounded Debye, not the CODATA conversion.
    CHECK(si.debye == 3.336e-30);
    CHECK(si.debye / si.e_charge ==
          doctest::Approx(2.0821674272401104e-11).epsilon(1e-14));
}

TEST_CASE("pressure to number density is the ideal-gas relation") {
    const Quantity n = pressure_to_number_density(1e-15, 1.0);
    CHECK(n.value() == doctest::Approx(72429705.160399204).epsilon(1e-12));
    CHECK(n.dimension() == dim_inverse_volume);

    // Linear in pressure, inverse in temperature.
    CHECK(pressure_to_number_density(2e-15, 1.0).value() ==
          doctest::Approx(2.0 * n.value()).epsilon(1e-14));
    CHECK(pressure_to_number_density(1e-15, 2.0).value() ==
          doctest::Approx(0.5 * n.value()).epsilon(1e-14));

    CHECK_THROWS_AS(pressure_to_number_density(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(pressure_to_number_density(1.0, 0.0), std::domain_error);
}

TEST_CASE("mean thermal momentum is sqrt(2 m k_B T)") {
    const Quantity p = mean_thermal_momentum(1e-27, 1.0);
    CHECK(p.value() ==
          doctest::Approx(1.6617153787577462e-25).epsilon(1e-12));
    CHECK(p.dimension() == dim_momentum);
    // Quadrupling the temperature doubles the momentum scale.
    CHECK(mean_thermal_momentum(1e-27, 4.0).value() ==
          doctest::Approx(2.0 * p.value()).epsilon(1e-14));
    CHECK_THROWS_AS(mean_thermal_momentum(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(mean_thermal_momentum(1e-27, -1.0), std::domain_error);
}

TEST_CASE("thermal wavelength is 2 pi hbar over the thermal momentum") {
    const Quantity lambda = thermal_wavelength(1e-27, 1.0);
    CHECK(lambda.value() ==
          doctest::Approx(3.9874880082614098e-9).epsilon(1e-12));
    CHECK(lambda.dimension() == dim_length);

    // Identity with the momentum scale.
    const Quantity p = mean_thermal_momentum(1e-27, 1.0);
    CHECK(lambda.value() * p.value() ==
          doctest::Approx(2.0 * std::numbers::pi * si.hbar).epsilon(1e-14));
}
