// Quantity arithmetic and the thermal gas-state conversions.
// SPDX-License-Identifier: Apache-2.0
#include "dipdec/quantities.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dipdec {

std::string dimension_to_string(const Dimension& d) {
    static const char* base[5] = {"kg", "m", "s", "K", "A"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        if (d[i] == 0) continue;
        if (!first) os << "·";
        os << base[i];
        if (d[i] != 1) os << "^" << static_cast<int>(d[i]);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

namespace {

[[noreturn]] void throw_mismatch(const char* op, const Dimension& a,
                                 const Dimension& b) {
    throw DimensionError(std::string("dimension mismatch in ") + op + ": " +
                         dimension_to_string(a) + " vs " +
                         dimension_to_string(b));
}

}  // namespace

Quantity Quantity::operator+(const Quantity& rhs) const {
    if (dim_ != rhs.dim_) throw_mismatch("addition", dim_, rhs.dim_);
    return {value_ + rhs.value_, dim_};
}

Quantity Quantity::operator-(const Quantity& rhs) const {
    if (dim_ != rhs.dim_) throw_mismatch("subtraction", dim_, rhs.dim_);
    return {value_ - rhs.value_, dim_};
}

Quantity Quantity::operator*(const Quantity& rhs) const {
    Dimension d{};
    for (int i = 0; i < 5; ++i)
        d[i] = static_cast<std::int8_t>(dim_[i] + rhs.dim_[i]);
    return {value_ * rhs.value_, d};
}

Quantity Quantity::operator/(const Quantity& rhs) const {
    Dimension d{};
    for (int i = 0; i < 5; ++i)
        d[i] = static_cast<std::int8_t>(dim_[i] - rhs.dim_[i]);
    return {value_ / rhs.value_, d};
}

Quantity Quantity::sqrt() const {
    Dimension d{};
    for (int i = 0; i < 5; ++i) {
        if (dim_[i] % 2 != 0)
            throw DimensionError("sqrt of quantity with odd exponent: " +
                                 dimension_to_string(dim_));
        d[i] = static_cast<std::int8_t>(dim_[i] / 2);
    }
    return {std::sqrt(value_), d};
}

Quantity Quantity::pow(int n) const {
    Dimension d{};
    for (int i = 0; i < 5; ++i) d[i] = static_cast<std::int8_t>(dim_[i] * n);
    return {std::pow(value_, n), d};
}

Quantity pressure_to_number_density(double p_pa, double temperature_k) {
    if (temperature_k <= 0.0)
        throw std::domain_error("pressure_to_number_density: T must be > 0 K");
    if (p_pa < 0.0)
        throw std::domain_error("pressure_to_number_density: p must be >= 0 Pa");
    return {p_pa / (si.k_B * temperature_k), dim_inverse_volume};
}

Quantity mean_thermal_momentum(double mass_kg, double temperature_k) {
    if (mass_kg <= 0.0)
        throw std::domain_error("mean_thermal_momentum: mass must be > 0 kg");
    if (temperature_k < 0.0)
        throw std::domain_error("mean_thermal_momentum: T must be >= 0 K");
    return {std::sqrt(2.0 * mass_kg * si.k_B * temperature_k), dim_momentum};
}

Quantity thermal_wavelength(double mass_kg, double temperature_k) {
    if (mass_kg <= 0.0)
        throw std::domain_error("thermal_wavelength: mass must be > 0 kg");
    if (temperature_k <= 0.0)
        throw std::domain_error("thermal_wavelength: T must be > 0 K");
    const double p_bar = std::sqrt(2.0 * mass_kg * si.k_B * temperature_k);
    return {2.0 * std::numbers::pi * si.hbar / p_bar, dim_length};
}

}  // namespace dipdec
