#pragma once

#include <functional>
#include <vector>

#include "specfun/derivatives.hpp"
#include "specfun/grid.hpp"
#include "specfun/measures.hpp"
#include "specfun/report.hpp"

namespace specfun {

// Sign-alternation scan of x^alpha f(x): requires (-1)^n (x^alpha f)^(n) >=
// -tol (|x^alpha f| + 1) for n = 0..max_order at every grid point. The
// analytic chain is used when given, numeric differentiation otherwise.
ClassReport check_cm(const RealFn& f, const DerivChain& chain, double alpha,
                     const Grid& grid, int max_order = 6, double tol = 1e-7);

// CM scan of -f'/f. A clean scan is cross-checked against Horn's roots
// criterion (f^{1/n} for n = 2, 3, numeric, loose tolerance); a spot-check
// failure downgrades the verdict to inconclusive.
ClassReport check_lcm(const RealFn& f, const DerivChain& chain, const Grid& grid,
                      int max_order = 5, double tol = 1e-7);

// Widder-Sokal criterion for generalized Stieltjes order lambda:
// c_k(f)(x) = x^{1-lambda} (x^{lambda-1+k} f(x))^{(k)} must be CM for
// k = 0..k_max; each c_k is scanned to derivative order 4 with exact
// binomial product-rule weights. Witness order field holds the failing k.
ClassReport check_stieltjes_order(const RealFn& f, const DerivChain& chain,
                                  double lambda, int k_max, const Grid& grid,
                                  double tol = 1e-7);

// Bernstein order lambda: x^{1-lambda} g'(x) must be CM, with the companion
// scan of g(x) / x^lambda run as a secondary check.
ClassReport check_bernstein_order(const RealFn& g, const DerivChain& chain,
                                  double lambda, const Grid& grid,
                                  int max_order = 5, double tol = 1e-7);

struct BernsteinRep {
    double a = 0.0;       // >= 0
    double b = 0.0;       // >= 0
    double lambda = 1.0;  // > 0
    MeasureSpec measure;  // on (0, inf), integral of (1+t)^{-lambda} dmu finite
};

// a + b x^lambda + integral gamma(lambda, x t) dmu(t) / t^lambda.
double evaluate_bernstein_rep(const BernsteinRep& rep, double x);

// x times the Laplace transform of g at x.
double xl_transform(const RealFn& g, double x);

// n-th approximant ((-1)^n f^(n)(n/t) / n!) (n/t)^{n+1} to the density
// represented by f, evaluated through logs so large n stays in range.
double post_widder_density(const RealFn& f, const DerivChain& chain, double t, int n);

// Membership scan for the Thorin-type class: x^{1-lambda} f'(x) must lie in
// the generalized Stieltjes class of order lambda+1-alpha (checked to k = 2).
ClassReport thorin_check(const RealFn& f, const DerivChain& chain, double lambda,
                         double alpha, const Grid& grid, double tol = 1e-7);

// Incomplete-beta approximant a + b x^lambda +
// (Gamma(lambda+n)/Gamma(n)) integral B(lambda, n, x/(x+n/t)) dmu(t)/t^lambda.
double thorin_approximant(const BernsteinRep& rep, int n, double x);

// Bernstein criterion through the semigroup: t -> exp(-x g(t)) must be CM
// for every listed x (scanned to derivative order 4).
ClassReport exp_bernstein_check(const RealFn& g, const std::vector<double>& x_list,
                                const Grid& grid, double tol = 1e-7);

}  // namespace specfun
