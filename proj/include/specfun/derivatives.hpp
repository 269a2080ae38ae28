#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "specfun/errors.hpp"

namespace specfun {

using RealFn = std::function<double(double)>;
// (x, n) -> d^n f / dx^n; n = 0 must return f(x).
using DerivChain = std::function<double(double, int)>;

struct DerivOptions {
    double h0 = 0.0;       // 0 selects an x-scaled default
    int ladder = 5;        // Richardson ladder length
    bool positive_domain = true;  // keep stencil points in (0, inf)
};

// n-th derivative at x. Uses the analytic chain when given, otherwise central
// differences with Richardson extrapolation in h^2. n <= 8 for numeric paths.
double derivative_n(const RealFn& f, double x, int n, const DerivChain& chain = nullptr,
                    const DerivOptions& opts = {});

struct LimitResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Polynomial (Neville) extrapolation of samples (h_i, v_i) to h = 0.
// Requires at least 3 samples with distinct h.
LimitResult extrapolate_limit(const std::vector<std::pair<double, double>>& samples);

}  // namespace specfun
