#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "specfun/derivatives.hpp"
#include "specfun/measures.hpp"
#include "specfun/report.hpp"
#include "specfun/special.hpp"

namespace specfun {

using ComplexMap = std::function<Complex(Complex)>;

// Polar product grid over the open upper half-plane: log-spaced moduli times
// linearly spaced arguments.
struct HalfPlaneGrid {
    double r_min = 1e-3;
    double r_max = 1e3;
    int n_r = 100;
    double theta_min = 0.01;
    double theta_max = M_PI - 0.01;
    int n_theta = 100;

    std::vector<Complex> points() const;
    Grid radial_grid() const { return Grid(r_min, r_max, n_r, Spacing::log); }
};

struct PickTriple {
    double a = 0.0;  // >= 0
    double b = 0.0;
    MeasureSpec measure;
};

struct StieltjesRep {
    double lambda = 1.0;  // > 0
    double c = 0.0;       // >= 0
    MeasureSpec measure;  // supported on [0, inf)
};

ClassReport verify_pick(const ComplexMap& f, const HalfPlaneGrid& grid = {}, double tol = 1e-9);

// (1/pi) lim_{y->0+} Im f(x+iy). Ladder heights shrink with |x| so the
// extrapolation stays inside the region where f is smooth; callers that know
// a tighter smoothness radius (distance to the nearest pole or cut end) pass
// it as scale, and scale = 0 keeps the |x| heuristic.
double pick_boundary_density(const ComplexMap& f, double x, double scale = 0.0);

PickTriple extract_pick_triple(const ComplexMap& f, double y_max = 1e6,
                               const std::vector<double>& y_ladder = {1.0, 0.5, 0.25, 0.125});

// a z + b + integral (1/(t-z) - t/(t^2+1)) dmu(t); the two kernel terms are
// evaluated together, never as separate integrals.
Complex evaluate_pick_rep(const PickTriple& triple, Complex z);

// c + integral dmu(t)/(t+x)^lambda.
double evaluate_stieltjes(const StieltjesRep& rep, double x);

// Boundary density of log Gamma(x+1)/(x log x): at s > 0 non-integer, with
// k = ceil(s), the value (log|Gamma(1-s)| + (k-1) log s)/(s((log s)^2 + pi^2)).
double log_gamma_ratio_density(double s);

ClassReport verify_logGamma_ratio_representation(const std::vector<double>& x_samples,
                                                 double tol);

// Checks three facets of log G(z+1)/(z^2 log z): the transform 1/2 - ratio has
// non-positive imaginary part on the grid, the boundary density recovered at
// -x_samples is non-negative, and direct values agree coarsely with
// 1/2 - integral of that density (the density tail decays only like
// 1/log^2 t, so the consistency tolerance is fixed at 5e-2).
ClassReport g_function_ratio_check(const HalfPlaneGrid& z_grid,
                                   const std::vector<double>& x_samples, double tol);

ClassReport lowner_psd(const RealFn& f, const RealFn& fprime,
                       const std::vector<double>& points, double tol = 1e-10);

}  // namespace specfun
