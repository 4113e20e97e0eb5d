// Cross-section implementations.  Closed forms are evaluated in grouped
// dimensionless form (coupling area × function of a) so extreme SI
// magnitudes never hit the floating-point range limits; the quadrature
// oracles integrate the defining angular integrals directly.
// SPDX-License-Identifier: Apache-2.0
#include "dipdec/scattering.hpp"

#include <cmath>
#include <numbers>

#include "dipdec/quadrature.hpp"
#include "dipdec/special.hpp"

namespace dipdec {

namespace {

constexpr double euler_gamma = 0.5772156649015329;

void require_context(const ScatteringContext& ctx, const char* where) {
    if (ctx.mass <= 0.0)
        throw std::domain_error(std::string(where) + ": mass must be > 0");
    if (ctx.radius <= 0.0)
        throw std::domain_error(std::string(where) + ": radius must be > 0");
    if (ctx.pair.d1 < 0.0 || ctx.pair.d2 < 0.0)
        throw std::domain_error(std::string(where) +
                                ": dipole magnitudes must be >= 0");
}

// Bracket of the total cross section, −1 − 8b² + 32b⁴ + cos 4b + 4b sin 4b,
// with the cancellation-free Taylor series below b = 0.05:
//   Σ_{n>=3} (−1)^{n+1} (2n−1) (4b)^{2n}/(2n)!   (leading term (256/9) b⁶).
double sigma_cm_bracket(double b) {
    if (b < 0.05) {
        const double t = 16.0 * b * b;  // (4b)²
        double power = t * t * t;       // (4b)⁶
        double sum = 0.0;
        const double coeffs[] = {5.0 / 720.0,
                                 -7.0 / 40320.0,
                                 9.0 / 3628800.0,
                                 -11.0 / 479001600.0,
                                 13.0 / 87178291200.0,
                                 -15.0 / 20922789888000.0};
        for (double c : coeffs) {
            sum += c * power;
            power *= t;
        }
        return sum;
    }
    return -1.0 - 8.0 * b * b + 32.0 * std::pow(b, 4) + std::cos(4.0 * b) +
           4.0 * b * std::sin(4.0 * b);
}

// Bracket of the effective cross section,
//   A(a) = a²(ln(4a²) − 2Ci(2a) + 2(γ−1)) + 2a sin 2a + cos 2a − 1,
// with the small-a series below a = 0.1 where the closed form cancels.
double sigma_eff_bracket(double a) {
    if (a < 0.1) {
        const double a2 = a * a;
        const double a6 = a2 * a2 * a2;
        return a6 * (1.0 / 9.0 +
                     a2 * (-2.0 / 135.0 +
                           a2 * (1.0 / 1050.0 + a2 * (-8.0 / 212625.0))));
    }
    return a * a * (std::log(4.0 * a * a) - 2.0 * cosine_integral(2.0 * a) +
                    2.0 * (euler_gamma - 1.0)) +
           2.0 * a * std::sin(2.0 * a) + std::cos(2.0 * a) - 1.0;
}

// Differential cross section as a raw double, for the oracle integrands.
double dcs_value(const ScatteringContext& ctx, double q) {
    const double x = ctx.radius * q / si.hbar;
    const double k3 = form_factor_kernel_over_x3(x);
    return (4.0 / (3.0 * std::numbers::pi)) * coupling_area(ctx) * k3 * k3;
}

}  // namespace

double coupling_area(const ScatteringContext& ctx) {
    const double root =
        ctx.mass * ctx.pair.d1 * ctx.pair.d2 / (si.eps0 * si.hbar * si.hbar);
    return root * root;
}

Kinematics Kinematics::from_momentum(const ScatteringContext& ctx, double p0) {
    require_context(ctx, "Kinematics");
    if (p0 < 0.0) throw std::domain_error("Kinematics: p0 must be >= 0");
    return Kinematics(p0, 2.0 * ctx.radius * p0 / si.hbar);
}

Kinematics Kinematics::from_temperature(const ScatteringContext& ctx,
                                        double temperature_k) {
    require_context(ctx, "Kinematics");
    const double p_bar =
        mean_thermal_momentum(ctx.mass, temperature_k).value();
    return Kinematics(p_bar, 2.0 * ctx.radius * p_bar / si.hbar);
}

Quantity potential_fourier_transform(const ScatteringContext& ctx, double q,
                                     double d2z) {
    require_context(ctx, "potential_fourier_transform");
    if (q <= 0.0)
        throw std::domain_error(
            "potential_fourier_transform: q must be > 0 (the q -> 0 limit is "
            "handled by the cross-section kernel series)");
    const double x = ctx.radius * q / si.hbar;
    // (2 d1 d2z ħ³)/(ε₀ R³ q³)·k(x) = (2 d1 d2z/ε₀)·k(x)/x³.
    const double value = 2.0 * ctx.pair.d1 * d2z / si.eps0 *
                         form_factor_kernel_over_x3(x);
    return {value, dim_energy_volume};
}

Quantity potential_fourier_transform_quadrature(const ScatteringContext& ctx,
                                                double q, double d2z) {
    require_context(ctx, "potential_fourier_transform_quadrature");
    if (q <= 0.0)
        throw std::domain_error(
            "potential_fourier_transform_quadrature: q must be > 0");
    // Radial route: with the transfer axis along the crystal dipole, the
    // angular part of the 3-D Fourier integral of the dipole-dipole
    // potential over r >= R reduces to
    //   Ṽ(q) = (d1 d2z/(2 ε₀)) ∫_{x0}^∞ h(x)/x dx,  x0 = R q/ħ,
    //   h(x)  = 4[(3 − x²) sin x − 3x cos x]/x³
    // (h is the sphere average of (1 − 3cos²θ) e^{i x cosθ}).  The tail
    // oscillates like −4 sin x/x², so integrate a smooth head directly and
    // accelerate the alternating half-period chunk series beyond it.
    const double x0 = ctx.radius * q / si.hbar;
    auto integrand = [](double x) {
        const double s = std::sin(x), c = std::cos(x);
        return 4.0 * ((3.0 - x * x) * s - 3.0 * x * c) / (x * x * x * x);
    };
    const QuadratureOptions opt{1e-10, 15};
    const double pi = std::numbers::pi;
    const double head_end = x0 + 6.0 * pi;
    const double head = integrate_chunked(integrand, x0, head_end, pi, opt);
    std::vector<double> chunks;
    chunks.reserve(64);
    for (int k = 0; k < 64; ++k) {
        const double a = head_end + k * pi;
        chunks.push_back(integrate_adaptive(integrand, a, a + pi, opt));
    }
    const double tail = accelerate_alternating_sum(chunks);
    const double value =
        ctx.pair.d1 * d2z / (2.0 * si.eps0) * (head + tail);
    return {value, dim_energy_volume};
}

Quantity differential_cross_section(const ScatteringContext& ctx, double q) {
    require_context(ctx, "differential_cross_section");
    if (q < 0.0)
        throw std::domain_error("differential_cross_section: q must be >= 0");
    return {dcs_value(ctx, q), dim_area};
}

Quantity differential_cross_section_assembled(const ScatteringContext& ctx,
                                              double q) {
    require_context(ctx, "differential_cross_section_assembled");
    if (q < 0.0)
        throw std::domain_error(
            "differential_cross_section_assembled: q must be >= 0");
    return {dcs_value(ctx, q) / (4.0 * std::numbers::pi), dim_area};
}

Quantity momentum_transfer(double p0, double theta) {
    if (p0 < 0.0) throw std::domain_error("momentum_transfer: p0 must be >= 0");
    if (theta < 0.0 || theta > std::numbers::pi)
        throw std::domain_error(
            "momentum_transfer: theta must lie in [0, pi]");
    return {2.0 * p0 * std::sin(0.5 * theta), dim_momentum};
}

Quantity sigma_cm_closed(const ScatteringContext& ctx, const Kinematics& kin) {
    require_context(ctx, "sigma_cm_closed");
    if (kin.p0() <= 0.0)
        throw std::domain_error("sigma_cm_closed: p0 must be > 0");
    const double a = kin.a();
    const double a6 = std::pow(a, 6);
    const double value =
        (4.0 / (3.0 * a6)) * coupling_area(ctx) * sigma_cm_bracket(kin.b());
    return {value, dim_area};
}

Quantity sigma_cm_quadrature(const ScatteringContext& ctx,
                             const Kinematics& kin) {
    require_context(ctx, "sigma_cm_quadrature");
    if (kin.p0() <= 0.0)
        throw std::domain_error("sigma_cm_quadrature: p0 must be > 0");
    // 2π ∫₀^π sinθ dσ/dΩ dθ with u = sin(θ/2):  8π ∫₀¹ u·dσ/dΩ(2 p0 u) du.
    // The integrand oscillates with u-period π/a; chunk accordingly.
    const double p0 = kin.p0();
    const double a = kin.a();
    auto f = [&](double u) { return u * dcs_value(ctx, 2.0 * p0 * u); };
    const double chunk =
        (a > std::numbers::pi) ? std::numbers::pi / a : 1.0;
    const double integral = integrate_chunked(f, 0.0, 1.0, chunk, {});
    return {8.0 * std::numbers::pi * integral, dim_area};
}

Quantity sigma_eff_closed(const ScatteringContext& ctx, const Kinematics& kin) {
    require_context(ctx, "sigma_eff_closed");
    if (kin.p0() < 0.0)
        throw std::domain_error("sigma_eff_closed: p0 must be >= 0");
    if (kin.p0() == 0.0) return {0.0, dim_area};  // analytic a -> 0 limit
    const double a = kin.a();
    const double a6 = std::pow(a, 6);
    // (4π/3) β A(a) with β = ħ² m² d1² d2²/(48π ε₀² R⁶ p0⁶) = 4C/(3π a⁶):
    const double value =
        (16.0 / (9.0 * a6)) * coupling_area(ctx) * sigma_eff_bracket(a);
    return {value, dim_area};
}

Quantity sigma_eff_quadrature(const ScatteringContext& ctx,
                              const Kinematics& kin) {
    require_context(ctx, "sigma_eff_quadrature");
    if (kin.p0() <= 0.0)
        throw std::domain_error("sigma_eff_quadrature: p0 must be > 0");
    // (2π/3) ∫ (1 − cosθ) dσ/dΩ d(cosθ) = (16π/3) ∫₀¹ u³ dσ/dΩ(2 p0 u) du.
    const double p0 = kin.p0();
    const double a = kin.a();
    auto f = [&](double u) {
        return u * u * u * dcs_value(ctx, 2.0 * p0 * u);
    };
    const double chunk =
        (a > std::numbers::pi) ? std::numbers::pi / a : 1.0;
    const double integral = integrate_chunked(f, 0.0, 1.0, chunk, {});
    return {16.0 * std::numbers::pi / 3.0 * integral, dim_area};
}

Quantity sigma_eff_large_a(const ScatteringContext& ctx,
                           const Kinematics& kin) {
    require_context(ctx, "sigma_eff_large_a");
    const double a = kin.a();
    if (a < 10.0)
        throw RegimeError(
            "sigma_eff_large_a: approximation requires a = 2 R p0/hbar >= 10");
    // (2 m² d1² d2²)/(9 ε₀² R⁴ p0⁴)·ln(4 R p0/ħ) = (32 C/(9 a⁴))·ln(2a).
    const double a4 = std::pow(a, 4);
    const double value =
        32.0 / (9.0 * a4) * coupling_area(ctx) * std::log(2.0 * a);
    return {value, dim_area};
}

}  // namespace dipdec
