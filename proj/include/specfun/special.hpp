#pragma once

#include <complex>

#include "specfun/errors.hpp"

namespace specfun {

using Complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640561764;

// Holomorphic branch of log Gamma on the cut plane C \ (-inf, 0]: real on
// (0, inf), continuous everywhere off the cut. Not the principal log of Gamma.
Complex log_gamma_principal(Complex z);

// Euler gamma on the real line; functional-equation continuation for x < 0.
double gamma_real(double x);

// exp(log_gamma_principal(z)); convenience for complex functional equations.
Complex gamma_complex(Complex z);

// psi for m = 0, m-th derivative of psi^(0) shifted: d^{m+1} log Gamma for
// m >= 1. Series value accelerated by the Euler-Maclaurin tail.
Complex polygamma(int m, Complex z);

double psi_integral_representation(double x);

double hurwitz_zeta(double s, double x);

// |numeric d/ds zeta(s,x) at s=0  -  (log Gamma(x) - log sqrt(2 pi))|.
double lerch_theorem_residual(double x, double h);

// Barnes G via the Weierstrass-type product for G(1+w) with tail correction.
Complex barnes_g(Complex z, int truncation = 100000);
// log G(1+w), product route, 1 + w off the poles.
Complex log_barnes_g1p(Complex w, int truncation = 100000);

// Fast log G(1+w) by recursion into an asymptotic regime; cross-validated
// against the product route. For hot loops over complex grids.
Complex log_barnes_g1p_fast(Complex w);

double multiple_zeta(int N, double z, double w);

// Defined in asymptotics.cpp: expansion main terms plus remainder integral.
double log_multiple_gamma(int N, double w, int m);

double incomplete_gamma(double lambda, double x);

double incomplete_beta(double a, double b, double x);

// Phi(z, 1, lambda) = sum z^n/(n+lambda), |z| < 1.
double lerch_phi(double z, double lambda);

// x^lambda Phi(-x, 1, lambda) = int_0^x u^{lambda-1}/(1+u) du, any x > 0.
double lerch_power_integral(double lambda, double x);

// lambda int_0^x u^{lambda-1} (1+u)^{-nu} du  =  x^lambda 2F1(nu,lambda;1+lambda;-x).
double hyp2f1_special(double nu, double lambda, double x);

}  // namespace specfun
