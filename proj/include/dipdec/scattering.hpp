// Dipole-dipole scattering: the potential's Fourier transform with the
// finite-crystal cutoff, and Born differential/total/effective cross
// sections — each closed form paired with an independent quadrature oracle.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dipdec/quantities.hpp"

namespace dipdec {

// Interacting dipole magnitudes: d1 on the crystal, d2 on the gas particle.
struct DipolePair {
    double d1 = 0.0;  // C·m
    double d2 = 0.0;  // C·m
};

// Everything the cross sections need besides kinematics.
struct ScatteringContext {
    DipolePair pair;
    double mass = 0.0;    // environmental particle mass, kg
    double radius = 0.0;  // crystal radius R, m
};

// Incident momentum and the dimensionless size parameter a = 2 R p0/ħ, kept
// consistent by construction.
class Kinematics {
public:
    static Kinematics from_momentum(const ScatteringContext& ctx, double p0);
    static Kinematics from_temperature(const ScatteringContext& ctx,
                                       double temperature_k);

    double p0() const { return p0_; }
    double a() const { return a_; }
    double b() const { return 0.5 * a_; }  // R p0/ħ

private:
    Kinematics(double p0, double a) : p0_(p0), a_(a) {}
    double p0_;
    double a_;
};

// (m d1 d2/(ε₀ ħ²))², the coupling area scale common to every cross section
// and rate formula; grouped before squaring so extreme SI magnitudes stay
// inside the double range.
double coupling_area(const ScatteringContext& ctx);

// Ṽ(q) = (2 d1 d2z ħ³)/(ε₀ R³ q³) · k(R q/ħ), J·m³.  q = 0 is a domain
// error; callers that need the q → 0 limit use the kernel series via the
// differential cross section.  d2z is the projection of d2 on the momentum
// transfer axis.
Quantity potential_fourier_transform(const ScatteringContext& ctx, double q,
                                     double d2z);

// Oracle for the transform: the same quantity computed from the raw radial
// integral of the potential over r >= R (tail quadrature in half-period
// chunks with alternating-series acceleration).  Slow; for validation only.
Quantity potential_fourier_transform_quadrature(const ScatteringContext& ctx,
                                                double q, double d2z);

// Orientation-averaged differential cross section (m²/sr),
//   dσ/dΩ = (4 ħ² m² d1² d2²)/(3π ε₀² R⁶ q⁶) · k(R q/ħ)²,
// continuous at q = 0 where it tends to (4 m² d1² d2²)/(27π ε₀² ħ⁴).
// The dipole-orientation average here carries the unnormalized
// ∫cos²θ dΩ = 4π/3 convention; the rate formulas assume it.
Quantity differential_cross_section(const ScatteringContext& ctx, double q);

// The alternative normalization (sphere-average ⟨cos²θ⟩ = 1/3), exactly
// 4π smaller than the form above.  Exposed for comparison; nothing in
// the rate pipeline uses it.
Quantity differential_cross_section_assembled(const ScatteringContext& ctx,
                                              double q);

// q = 2 p0 sin(θ/2) for elastic scattering; θ outside [0, π] is a domain
// error.
Quantity momentum_transfer(double p0, double theta);

// Total cross section over outgoing directions, closed form:
//   σ_CM = (m² d1² d2² ħ²)/(48 ε₀² R⁶ p0⁶) ·
//          [−1 − 8b² + 32b⁴ + cos 4b + 4b sin 4b],  b = R p0/ħ,
// with a Taylor-series bracket below b = 0.05 where the closed bracket
// cancels catastrophically.
Quantity sigma_cm_closed(const ScatteringContext& ctx, const Kinematics& kin);

// Oracle: 2π ∫₀^π sinθ · dσ/dΩ(q(θ)) dθ by adaptive quadrature (u = sin(θ/2)
// substitution, oscillation-aligned chunking), relative tolerance 1e-8.
Quantity sigma_cm_quadrature(const ScatteringContext& ctx,
                             const Kinematics& kin);

// (1 − cosθ)-weighted effective cross section, closed form:
//   σ_eff = (4π/3) β [a²(ln(4a²) − 2Ci(2a) + 2(γ−1)) + 2a sin 2a + cos 2a − 1],
//   β = ħ² m² d1² d2²/(48π ε₀² R⁶ p0⁶),  a = 2 R p0/ħ,
// with a small-a series below a = 0.1.  p0 = 0 returns exactly 0 (the
// analytic limit).
Quantity sigma_eff_closed(const ScatteringContext& ctx, const Kinematics& kin);

// Oracle: (2π/3) ∫ (1 − cosθ) dσ/dΩ(q(θ)) d(cosθ) by adaptive quadrature.
Quantity sigma_eff_quadrature(const ScatteringContext& ctx,
                              const Kinematics& kin);

// Large-a logarithmic approximation
//   σ_eff ≈ (2 m² d1² d2²)/(9 ε₀² R⁴ p0⁴) · ln(4 R p0/ħ);
// requires a >= 10 (RegimeError below).  Drops the 2(γ−1) and Ci terms, so
// it stays ~5% high even at a = 2000 (the error decays only
// logarithmically).
Quantity sigma_eff_large_a(const ScatteringContext& ctx, const Kinematics& kin);

}  // namespace dipdec
