// Adaptive quadrature wrappers: a Gauss–Kronrod core with an explicit
// convergence contract, plus helpers for oscillatory integrands.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "dipdec/errors.hpp"

namespace dipdec {

struct QuadratureOptions {
    double rel_tol = 1e-8;  // target relative tolerance
    int max_depth = 15;     // adaptive subdivision depth
};

// Integrate f over [lo, hi] with adaptive Gauss–Kronrod (15-point rule).
// Converges to opt.rel_tol relative to the L1 norm of the integrand, with
// an absolute floor so that integrals that are legitimately zero do not
// spuriously fail.  Throws NumericError with the achieved error estimate
// when the tolerance cannot be met within opt.max_depth subdivisions.
double integrate_adaptive(const std::function<double(double)>& f, double lo,
                          double hi, const QuadratureOptions& opt = {});

// Integrate an oscillatory f over [lo, hi] by splitting the range into
// chunks of at most chunk_width (aligned to lo) and summing adaptive
// integrals per chunk.  Intended for integrands whose oscillation period is
// known; chunk_width should be at most one half-period so each chunk is
// smooth for the adaptive core.
double integrate_chunked(const std::function<double(double)>& f, double lo,
                         double hi, double chunk_width,
                         const QuadratureOptions& opt = {});

// Gauss–Legendre nodes and weights on [-1, 1] for arbitrary order n,
// computed by Newton iteration on the Legendre recurrence.  Used by the
// fixed-order tensor-product evaluation of the generic decoherence rate.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre_rule(int n);

// Sum an alternating (or eventually alternating) series by repeated
// averaging of partial sums (van Wijngaarden transformation).  `terms`
// holds consecutive terms of the series; returns the accelerated limit.
// Used by the cosine-integral quadrature oracle to handle the half-period
// tail decomposition.
double accelerate_alternating_sum(const std::vector<double>& terms);

}  // namespace dipdec
