// Quadrature engine implementation on top of Boost's Gauss–Kronrod rule.
// SPDX-License-Identifier: Apache-2.0
#include "dipdec/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace dipdec {

namespace {

// Boost's recursive Gauss-Kronrod driver reports the error estimate of the
// variable-mapped integrand without applying the interval scale factor, so
// on a narrow interval the estimate is inflated by 1/width (and deflated on
// a wide one) while the result itself is fine.  Mapping the integral onto
// [-1, 1] here keeps Boost's top-level scale at 1, which puts the reported
// error and L1 norm in the same units; they are then converted back to the
// original variable together with the result.
double integrate_core(const std::function<double(double)>& f, double lo,
                      double hi, const QuadratureOptions& opt,
                      double* error_estimate, double* l1_norm) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::domain_error("integrate_adaptive: bounds must be finite");
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double result =
        half *
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            [&f, mid, half](double u) { return f(mid + half * u); }, -1.0,
            1.0, opt.max_depth, opt.rel_tol, error_estimate, l1_norm);
    if (error_estimate) *error_estimate *= half;
    if (l1_norm) *l1_norm *= half;
    if (!std::isfinite(result))
        throw NumericError("integrate_adaptive: non-finite result");
    return result;
}

// Relative convergence against the L1 norm, with an absolute floor so a
// zero integral of a zero integrand passes trivially.
void require_converged(double error_estimate, double l1_norm,
                       const QuadratureOptions& opt) {
    const double scale = std::max(l1_norm, 1e-300);
    const double achieved = error_estimate / scale;
    if (achieved > 10.0 * opt.rel_tol) {
        std::ostringstream os;
        os << "integrate_adaptive: failed to converge (achieved relative "
              "error "
           << achieved << ", requested " << opt.rel_tol << ")";
        throw NumericError(os.str());
    }
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, const QuadratureOptions& opt) {
    if (!(hi > lo)) {
        if (hi == lo) return 0.0;
        throw std::domain_error("integrate_adaptive: hi must be >= lo");
    }
    double error_estimate = 0.0;
    double l1_norm = 0.0;
    const double result =
        integrate_core(f, lo, hi, opt, &error_estimate, &l1_norm);
    require_converged(error_estimate, l1_norm, opt);
    return result;
}

double integrate_chunked(const std::function<double(double)>& f, double lo,
                         double hi, double chunk_width,
                         const QuadratureOptions& opt) {
    if (!(chunk_width > 0.0))
        throw std::domain_error("integrate_chunked: chunk_width must be > 0");
    if (hi <= lo) return 0.0;
    // The convergence contract applies to the whole integral: per-chunk
    // error and L1 norm are accumulated and judged in aggregate, so a tail
    // chunk that is negligible against the total is not required to meet
    // the relative tolerance against its own tiny magnitude.
    double sum = 0.0;
    double error_sum = 0.0;
    double l1_sum = 0.0;
    double a = lo;
    while (a < hi) {
        const double b = std::min(a + chunk_width, hi);
        double error_estimate = 0.0;
        double l1_norm = 0.0;
        sum += integrate_core(f, a, b, opt, &error_estimate, &l1_norm);
        error_sum += error_estimate;
        l1_sum += l1_norm;
        a = b;
    }
    require_converged(error_sum, l1_sum, opt);
    return sum;
}

GaussLegendreRule gauss_legendre_rule(int n) {
    if (n < 2) throw std::domain_error("gauss_legendre_rule: order must be >= 2");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th root of P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(x) and P'_n(x) by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

double accelerate_alternating_sum(const std::vector<double>& terms) {
    if (terms.empty()) return 0.0;
    // Partial sums, then repeated pairwise averaging; the last surviving
    // entry of the averaging triangle is the accelerated limit.
    std::vector<double> row(terms.size());
    double s = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        s += terms[i];
        row[i] = s;
    }
    while (row.size() > 1) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
    }
    return row.front();
}

}  // namespace dipdec
