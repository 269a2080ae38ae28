#pragma once

#include <utility>
#include <vector>

#include "specfun/grid.hpp"
#include "specfun/report.hpp"

namespace specfun {

// Scaled unit-ball volume table: volume = pi^{n/2}/Gamma(n/2+1), scaled =
// volume^{1/(n log n)}, both through logs. The verdicts summarize the whole
// table; gap_to_sqrt_e_shrinks asks whether |scaled - sqrt(e)| falls between
// every pair of consecutive rows, which the data only does up to n = 3.
struct UnitBallRow {
    int n = 0;
    double volume = 0.0;
    double scaled = 0.0;
};

struct UnitBallReport {
    std::vector<UnitBallRow> rows;  // n = 2 .. n_max
    bool decreasing = false;
    bool log_convex = false;
    bool gap_to_sqrt_e_shrinks = false;
};

// n_max in [3, 300]; the cap keeps the volumes themselves inside double range.
UnitBallReport unit_ball_sequence(int n_max);

// Envelope family h_a(x) = (1+1/x)^{ax} with rho = log(1+1/x) - 1/(1+x), so
// h' = a h rho, and the logarithmic ratio -rho'/rho.
double h_value(double a, double x);
double rho_value(double x);
double rho_laplace_route(double x);  // quadrature cross-check of rho
double g_ratio_value(double x);

// Probability density on (0, 1) recovered from boundary values of -rho'/rho
// after removing the unit point mass.
double tau_density(double s);

// F_a(t) = (1+a) e^{-t} + integral tau(s) e^{-st} ds - a (1-e^{-t})/t.
// Affine and strictly decreasing in a pointwise in t.
double envelope_value(double a, double t);

// t_n = integral_0^1 s^n tau(1-s) ds for n = 0..n_max.
std::vector<double> h_moment_sequence(int n_max);

enum class ThresholdCriterion { lcm_of_derivative };

// Bisects on a for "F_a >= -tol on a fixed log grid of t". The verified
// region in a is an interval, so the bracket must straddle its edge or
// BracketError is thrown.
double h_threshold_bisect(ThresholdCriterion criterion, double lo, double hi, double tol);

ClassReport h_derivative_cm(double a, const Grid& grid, int max_order, double tol);
ClassReport h_derivative_stieltjes(double a, const Grid& grid, double tol);

// Composite scan at pinned parameters bracketing the derivative thresholds:
// verified means h' passed the alternating scan at a = 2.25, failed it at
// a = 2.35, and passed the order-one kernel scan at a = 1. Any other outcome
// is inconclusive, carrying the witness of whichever sub-scan broke the
// expected ordering if one did. The first sign violation above the CM
// threshold moves to ever higher derivative orders as a approaches it from
// above, so a bounded-order scan at a = 2.35 lands on the clean side and the
// composite verdict stays inconclusive in practice.
ClassReport h_cm_threshold_check();

struct HFamilyState {
    double a = 0.0;
    std::vector<std::pair<double, double>> tau_samples;  // (s, tau(s))
    std::vector<double> moments;
};

// Samples tau, computes moments, and enforces the probability invariants:
// nonnegative samples, unit mass, decreasing moments.
HFamilyState h_family_state(double a, int n_moments);

// Gamma quotient family g(x) = x^lambda Gamma(x)/Gamma(x+lambda),
// sigma = (log g)', and the increment ratio
// xi(t) = lambda - (1-e^{-lambda t})/(1-e^{-t}).
double g_lambda_value(double lambda, double x);
double sigma_lambda_value(double lambda, double x);
double xi_value(double lambda, double t);

struct GLambdaReport {
    double lambda = 0.0;
    // xi is positive and increasing for lambda > 1, negative and decreasing
    // for lambda < 1; the flags record the direction appropriate to lambda.
    bool xi_sign_ok = false;
    bool xi_monotone = false;
    // g increases for lambda > 1 and decreases for lambda < 1 (sigma's sign).
    bool monotone_direction = false;
    ClassReport sigma_cm;    // x sigma(x), sign-adjusted, completely monotone
    ClassReport membership;  // lambda > 1: power-kernel scan of g at order
                             // lambda - 1; lambda < 1: order-two kernel scan
                             // of log g
};

// lambda = 1 is excluded: g is identically one there and carries no class
// content. Use the value functions directly for that case.
GLambdaReport g_lambda_suite(double lambda, const Grid& grid, double tol);

// log(Gamma(x)Gamma(x+a+b)/(Gamma(x+a)Gamma(x+b))): the Laplace route must
// agree with the direct logs at x_samples and the Laplace density must pass
// the alternating scan, else AssertionError; returns the order-two kernel
// scan report for the quotient.
double gamma_ratio_log(double a, double b, double x);
double gamma_ratio_integral(double a, double b, double x);
ClassReport gamma_ratio_representation(double a, double b, const std::vector<double>& x_samples,
                                       double tol);

}  // namespace specfun
