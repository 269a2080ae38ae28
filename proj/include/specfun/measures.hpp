#pragma once

#include <functional>
#include <vector>

#include "specfun/errors.hpp"
#include "specfun/quadrature.hpp"

namespace specfun {

struct PointMass {
    double location = 0.0;
    double weight = 0.0;  // >= 0
};

// Interval bounds may be +-infinity. Singular flags mark endpoints where the
// density blows up integrably; integration then routes those endpoints through
// the double-exponential rule.
struct DensityPiece {
    double lower = 0.0;
    double upper = 0.0;
    std::function<double(double)> density;
    bool singular_lower = false;
    bool singular_upper = false;
};

struct MeasureSpec {
    std::vector<PointMass> point_masses;
    std::vector<DensityPiece> density_pieces;

    // Sampled sanity pass: weights >= 0, densities finite and >= 0 at probe
    // points, density intervals pairwise disjoint.
    void validate(int samples_per_piece = 16) const;

    // sum_i w_i kernel(t_i) + sum_pieces integral kernel * density.
    double integrate_against(const std::function<double(double)>& kernel,
                             const QuadratureConfig& cfg) const;
};

}  // namespace specfun
