#pragma once

#include <optional>
#include <vector>

#include "specfun/special.hpp"

namespace specfun {

// Stationary points of log|Gamma| on the real line: the positive minimum of
// Gamma, then one digamma root inside each interval (-k, -k+1). Each is a
// local minimum of |Gamma| since |Gamma| blows up at both neighboring poles.
struct ExtremalEntry {
    int k = 0;
    double x = 0.0;
    double log_abs_gamma = 0.0;
};

struct ExtremalTable {
    std::vector<ExtremalEntry> entries;  // k = 0 .. k_max
};

ExtremalTable extremal_points(int k_max);

// Solves log_gamma_principal(w) = target by damped Newton on the closed
// upper half-plane. Without a seed, large targets start from a Stirling
// inversion of w(log w - 1) = target and small ones from a fixed interior
// point. Real targets above the minimum of log Gamma have two real
// preimages; the seed decides which one Newton reaches.
Complex invert_log_gamma(Complex target, std::optional<Complex> seed = std::nullopt);

// Half-plane inverse branch: w with log_gamma_principal(w) = log z - i(k+1)pi,
// so Gamma(w) = (-1)^{k+1} z. Maps the open upper half-plane into itself.
Complex branch_inverse(int k, Complex z);

}  // namespace specfun
