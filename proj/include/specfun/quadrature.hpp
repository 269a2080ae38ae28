#pragma once

#include <functional>
#include <vector>

#include "specfun/errors.hpp"

namespace specfun {

// How the integrand decays toward an infinite endpoint; selects the change of
// variables (exp map for e^{-ct} tails, rational map for ~ t^{-p} tails).
enum class TailDecay { exponential, algebraic };

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    std::vector<double> breakpoints;
    TailDecay tail = TailDecay::exponential;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

// Adaptive integration over [lower, upper]; either bound may be infinite.
// Panels adjacent to a declared breakpoint use tanh-sinh (robust to endpoint
// singularities), the rest adaptive Gauss-Kronrod 7-15.
QuadResult integrate(const std::function<double(double)>& f, double lower, double upper,
                     const QuadratureConfig& cfg = {});

}  // namespace specfun
