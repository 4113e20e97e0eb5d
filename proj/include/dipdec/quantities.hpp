// Unit-aware scalar quantities, SI physical constants, and gas-state
// conversions used by every downstream formula.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "dipdec/errors.hpp"

namespace dipdec {

// Exponents over the base units (kg, m, s, K, A), in that order.
using Dimension = std::array<std::int8_t, 5>;

inline constexpr Dimension dim_less{0, 0, 0, 0, 0};
inline constexpr Dimension dim_mass{1, 0, 0, 0, 0};
inline constexpr Dimension dim_length{0, 1, 0, 0, 0};
inline constexpr Dimension dim_time{0, 0, 1, 0, 0};
inline constexpr Dimension dim_temperature{0, 0, 0, 1, 0};
inline constexpr Dimension dim_area{0, 2, 0, 0, 0};
inline constexpr Dimension dim_inverse_volume{0, -3, 0, 0, 0};
inline constexpr Dimension dim_momentum{1, 1, -1, 0, 0};
inline constexpr Dimension dim_action{1, 2, -1, 0, 0};        // J·s
inline constexpr Dimension dim_energy_volume{1, 5, -2, 0, 0};  // J·m³
inline constexpr Dimension dim_rate{0, 0, -1, 0, 0};           // Hz

std::string dimension_to_string(const Dimension& d);

// A double tagged with a dimension vector.  Addition and subtraction demand
// matching dimensions; multiplication and division combine exponents; sqrt
// requires all exponents even.  Hot numerical loops work on raw doubles and
// wrap their results at the API boundary.
class Quantity {
public:
    constexpr Quantity() : value_(0.0), dim_(dim_less) {}
    constexpr Quantity(double value, const Dimension& dim)
        : value_(value), dim_(dim) {}

    double value() const { return value_; }
    const Dimension& dimension() const { return dim_; }
    bool is_dimensionless() const { return dim_ == dim_less; }

    Quantity operator+(const Quantity& rhs) const;
    Quantity operator-(const Quantity& rhs) const;
    Quantity operator*(const Quantity& rhs) const;
    Quantity operator/(const Quantity& rhs) const;
    Quantity operator*(double s) const { return {value_ * s, dim_}; }
    Quantity operator/(double s) const { return {value_ / s, dim_}; }

    // Square root; throws DimensionError unless every exponent is even.
    Quantity sqrt() const;
    // Integer power (may be negative).
    Quantity pow(int n) const;

private:
    double value_;
    Dimension dim_;
};

inline Quantity operator*(double s, const Quantity& q) { return q * s; }

// Immutable SI constants.  The Debye here is the conventional rounded
// 3.336e-30 C·m used throughout the scenario definitions.
struct PhysicalConstants {
    double hbar;      // reduced Planck constant, J·s
    double k_B;       // Boltzmann constant, J/K
    double eps0;      // vacuum permittivity, C²·N⁻¹·m⁻²
    double e_charge;  // elementary charge, C
    double debye;     // dipole-moment unit, C·m
};

inline constexpr PhysicalConstants si{
    1.054571817e-34,   // hbar
    1.380649e-23,      // k_B (exact)
    8.8541878128e-12,  // eps0
    1.602176634e-19,   // e_charge (exact)
    3.336e-30,         // debye
};

// n = p/(k_B T).  p in Pa, T in K; returns number density (m⁻³).
Quantity pressure_to_number_density(double p_pa, double temperature_k);

// p̄ = sqrt(2 m k_B T), the momentum scale of the thermal gas (kg·m·s⁻¹).
Quantity mean_thermal_momentum(double mass_kg, double temperature_k);

// λ₀ = 2πħ/p̄, the de Broglie wavelength at the thermal momentum (m).
Quantity thermal_wavelength(double mass_kg, double temperature_k);

}  // namespace dipdec
