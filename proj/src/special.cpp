// Special-function implementations: form-factor kernel, cosine integral
// (series, asymptotic, and quadrature-oracle routes), momentum averaging.
// SPDX-License-Identifier: Apache-2.0
#include "dipdec/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "dipdec/quadrature.hpp"
#include "dipdec/quantities.hpp"

namespace dipdec {

namespace detail {

double form_factor_kernel_series(double x) {
    // k(x) = Σ_{n>=1} (−1)^{n+1} (2n) x^{2n+1}/(2n+1)!; six terms keep the
    // truncation below 1e-12 relative up to the switchover.
    const double x2 = x * x;
    return x * x2 *
           (1.0 / 3.0 +
            x2 * (-1.0 / 30.0 +
                  x2 * (1.0 / 840.0 +
                        x2 * (-1.0 / 45360.0 +
                              x2 * (1.0 / 3991680.0 +
                                    x2 * (-1.0 / 518918400.0))))));
}

double form_factor_kernel_direct(double x) { return std::sin(x) - x * std::cos(x); }

double cosine_integral_series(double x) {
    // Ci(x) = γ + ln x + Σ_{n>=1} (−x²)ⁿ/(2n·(2n)!), summed in long double
    // so the alternating growth up to n ≈ x/2 does not eat the result.
    constexpr long double euler_gamma =
        0.57721566490153286060651209008240243L;
    const long double lx = static_cast<long double>(x);
    const long double x2 = lx * lx;
    long double sum = 0.0L;
    long double term = 1.0L;  // running (−x²)ⁿ/(2n)!
    for (int n = 1; n <= 80; ++n) {
        term *= -x2 / ((2 * n - 1) * (2 * n));
        const long double contrib = term / (2 * n);
        sum += contrib;
        if (std::abs(contrib) < 1e-24L * (1.0L + std::abs(sum)) && n > 3) break;
    }
    return static_cast<double>(euler_gamma + std::log(lx) + sum);
}

double cosine_integral_asymptotic(double x) {
    // Ci(x) = f(x) sin(x) − g(x) cos(x) with the divergent asymptotic series
    //   f ~ (1/x) Σ (−1)ⁿ (2n)!/x^{2n},  g ~ (1/x²) Σ (−1)ⁿ (2n+1)!/x^{2n},
    // truncated at the smallest term (optimal truncation).
    const double x2 = x * x;
    double f = 0.0, g = 0.0;
    double f_term = 1.0;  // (2n)!/x^{2n} at n = 0
    double g_term = 1.0;  // (2n+1)!/x^{2n} at n = 0
    double sign = 1.0;
    for (int n = 0; n < 200; ++n) {
        f += sign * f_term;
        g += sign * g_term;
        const double f_next = f_term * (2 * n + 1) * (2 * n + 2) / x2;
        const double g_next = g_term * (2 * n + 2) * (2 * n + 3) / x2;
        if (f_next >= f_term || f_term < 1e-20) break;  // optimal truncation
        f_term = f_next;
        g_term = g_next;
        sign = -sign;
    }
    return (f / x) * std::sin(x) - (g / x2) * std::cos(x);
}

}  // namespace detail

double form_factor_kernel(double x) {
    if (x < 0.0)
        throw std::domain_error("form_factor_kernel: x must be >= 0");
    if (x < detail::kernel_series_switch)
        return detail::form_factor_kernel_series(x);
    return detail::form_factor_kernel_direct(x);
}

double form_factor_kernel_over_x3(double x) {
    if (x < 0.0)
        throw std::domain_error("form_factor_kernel_over_x3: x must be >= 0");
    if (x < detail::kernel_series_switch) {
        const double x2 = x * x;
        return 1.0 / 3.0 +
               x2 * (-1.0 / 30.0 +
                     x2 * (1.0 / 840.0 +
                           x2 * (-1.0 / 45360.0 +
                                 x2 * (1.0 / 3991680.0 +
                                       x2 * (-1.0 / 518918400.0)))));
    }
    return detail::form_factor_kernel_direct(x) / (x * x * x);
}

double one_minus_sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 0.5) {
        // 1 − sin(x)/x = x²/6 − x⁴/120 + x⁶/5040 − x⁸/362880 + x¹⁰/39916800…
        const double x2 = x * x;
        return x2 * (1.0 / 6.0 +
                     x2 * (-1.0 / 120.0 +
                           x2 * (1.0 / 5040.0 +
                                 x2 * (-1.0 / 362880.0 +
                                       x2 * (1.0 / 39916800.0)))));
    }
    return 1.0 - std::sin(x) / x;
}

double cosine_integral(double x) {
    if (x <= 0.0) throw std::domain_error("cosine_integral: x must be > 0");
    if (x < detail::ci_branch_switch) return detail::cosine_integral_series(x);
    return detail::cosine_integral_asymptotic(x);
}

double cosine_integral_quadrature(double x) {
    if (x <= 0.0)
        throw std::domain_error("cosine_integral_quadrature: x must be > 0");
    // Ci(x) = −∫ₓ^∞ cos(t)/t dt.  Split the tail at the half-period grid
    // x, x+π, x+2π, …: the chunk integrals alternate in sign with slowly
    // decaying magnitude, so repeated averaging of the partial sums
    // converges far faster than the raw series.
    constexpr int chunks = 48;
    const QuadratureOptions opt{1e-13, 15};
    std::vector<double> terms;
    terms.reserve(chunks);
    for (int k = 0; k < chunks; ++k) {
        const double a = x + k * std::numbers::pi;
        const double b = a + std::numbers::pi;
        terms.push_back(integrate_adaptive(
            [](double t) { return std::cos(t) / t; }, a, b, opt));
    }
    return -accelerate_alternating_sum(terms);
}

MomentumDistribution MomentumDistribution::delta_at_mean(double mass_kg,
                                                         double temperature_k) {
    if (mass_kg <= 0.0)
        throw std::domain_error("MomentumDistribution: mass must be > 0");
    if (temperature_k < 0.0)
        throw std::domain_error("MomentumDistribution: T must be >= 0");
    return {Kind::DeltaAtMean, mass_kg, temperature_k};
}

MomentumDistribution MomentumDistribution::maxwell_boltzmann(
    double mass_kg, double temperature_k) {
    if (mass_kg <= 0.0)
        throw std::domain_error("MomentumDistribution: mass must be > 0");
    if (temperature_k <= 0.0)
        throw std::domain_error(
            "MomentumDistribution: Maxwell-Boltzmann requires T > 0");
    return {Kind::MaxwellBoltzmann, mass_kg, temperature_k};
}

double MomentumDistribution::mean_momentum() const {
    return std::sqrt(2.0 * mass * si.k_B * temperature);
}

double momentum_pdf(const MomentumDistribution& dist, double p0) {
    if (dist.kind == MomentumDistribution::Kind::DeltaAtMean)
        throw UnsupportedOperationError(
            "momentum_pdf: delta distribution has no pointwise density; use "
            "expectation_over_momentum");
    if (p0 < 0.0) throw std::domain_error("momentum_pdf: p0 must be >= 0");
    const double two_mkt = 2.0 * dist.mass * si.k_B * dist.temperature;
    const double norm =
        std::pow(std::numbers::pi * two_mkt, -1.5);  // (2π m k_B T)^{-3/2}
    return 4.0 * std::numbers::pi * p0 * p0 * norm *
           std::exp(-p0 * p0 / two_mkt);
}

double expectation_over_momentum(const MomentumDistribution& dist,
                                 const std::function<double(double)>& f) {
    auto checked = [&f](double p0) {
        const double v = f(p0);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "expectation_over_momentum: integrand non-finite at p0 = "
               << p0;
            throw NumericError(os.str());
        }
        return v;
    };
    if (dist.kind == MomentumDistribution::Kind::DeltaAtMean)
        return checked(dist.mean_momentum());
    const double p_bar = dist.mean_momentum();
    const double upper = p_bar + 10.0 * p_bar;  // tail mass ~ e^{-121}
    // Cross sections carry an oscillation of period ~ ħ/R in p0, which at
    // thermal momenta means thousands of periods across the support; the
    // subdivision depth must reach leaf widths below one period before the
    // error estimate can certify them, hence the deep limit.
    return integrate_adaptive(
        [&](double p0) { return momentum_pdf(dist, p0) * checked(p0); }, 0.0,
        upper, QuadratureOptions{1e-8, 22});
}

}  // namespace dipdec
