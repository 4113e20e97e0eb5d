// Special functions and the thermal momentum distribution: the finite-size
// form-factor kernel, the cosine integral, and Maxwell–Boltzmann averaging.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "dipdec/errors.hpp"

namespace dipdec {

// k(x) = sin(x) − x·cos(x), the uniform-sphere form-factor bracket.
// Series evaluation below the switchover avoids catastrophic cancellation;
// relative error <= 1e-12 across x >= 0.
double form_factor_kernel(double x);

// k(x)/x³, continuous through x = 0 where it tends to 1/3.  This is the
// combination the differential cross section actually needs; evaluating it
// directly keeps the q → 0 limit exact.
double form_factor_kernel_over_x3(double x);

// (1 − sin(x)/x), the spherical phase-average deficit appearing in the
// generic rate integral; series evaluation near 0 keeps relative accuracy.
double one_minus_sinc(double x);

// Ci(x) = −∫ₓ^∞ cos(t)/t dt.  Power series (summed in long double) below
// the branch switchover, asymptotic expansion with optimal truncation
// above; absolute error <= 1e-10 on [1e-6, 1e6].  x <= 0 is a domain error.
double cosine_integral(double x);

// Independent slow-path oracle for Ci: direct quadrature of the defining
// tail integral in half-period chunks, accelerated by repeated averaging of
// the alternating chunk series.
double cosine_integral_quadrature(double x);

namespace detail {
// Both kernel branches, exposed for branch-agreement checks at the
// switchover point.
double form_factor_kernel_series(double x);
double form_factor_kernel_direct(double x);
// Both Ci branches, likewise.
double cosine_integral_series(double x);
double cosine_integral_asymptotic(double x);
// Switchover abscissas.
inline constexpr double kernel_series_switch = 0.5;
inline constexpr double ci_branch_switch = 23.0;
}  // namespace detail

// Distribution of the environmental particle's momentum magnitude.
struct MomentumDistribution {
    enum class Kind { DeltaAtMean, MaxwellBoltzmann };

    Kind kind;
    double mass;         // kg
    double temperature;  // K

    static MomentumDistribution delta_at_mean(double mass_kg,
                                              double temperature_k);
    static MomentumDistribution maxwell_boltzmann(double mass_kg,
                                                  double temperature_k);

    // p̄ = sqrt(2 m k_B T).
    double mean_momentum() const;
};

// Pointwise density S(p₀) of the Maxwell–Boltzmann distribution,
// 4π p₀² (2π m k_B T)^{-3/2} exp(−p₀²/(2 m k_B T)).  The delta variant has
// no pointwise density and is rejected with UnsupportedOperationError.
double momentum_pdf(const MomentumDistribution& dist, double p0);

// E[f] under the distribution: delta sifting for DeltaAtMean, adaptive
// quadrature of S·f over [0, p̄ + 10·p̄] (the tail beyond carries < 1e-20 of
// the mass) at relative tolerance 1e-8 for MaxwellBoltzmann.  A non-finite
// integrand value raises NumericError naming the offending momentum.
double expectation_over_momentum(const MomentumDistribution& dist,
                                 const std::function<double(double)>& f);

}  // namespace dipdec
