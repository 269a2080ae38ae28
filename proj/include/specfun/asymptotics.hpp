#pragma once

#include <vector>

#include "specfun/report.hpp"
#include "specfun/series.hpp"

namespace specfun {

// Coefficients of (t/(e^t - 1))^N: numbers[k] = B_{N,k}(0). Polynomials in x
// follow by the Appell shift B_{N,k}(x) = sum_j C(k,j) B_{N,j} x^{k-j}.
struct BernoulliTable {
    int N = 1;
    int max_order = 40;
    std::vector<Rational> numbers;
};

// Cached per N; safe for concurrent readers after first use.
const BernoulliTable& bernoulli_table(int N, int max_order = 40);

double multiple_bernoulli(int N, int k, double x);
Rational multiple_bernoulli_rational(int N, int k, const Rational& x);

// All non-remainder terms of the large-w expansion of log Gamma_N at order m:
// the B_{N,N}(w) log-term, the harmonic-weighted positive powers, and the
// k = N+1..m inverse powers.
double expansion_terms(int N, int m, double w);

// (f - T_m)(t) with f(t) = (t/(1 - e^{-t}))^N; tail series below t = 1.
double remainder_integrand_difference(int N, int m, double t);

// R_{N,m}(w) = int_0^inf e^{-wt} t^{-(N+1)} (f - T_m)(t) dt.
double remainder_RNm(int N, int m, double w);

// Same integral with an extra t^power factor: (-1)^power d^power/dw^power R.
double remainder_RNm_weighted(int N, int m, double w, int power);

// mu(x) = log Gamma(x) - (x - 1/2) log x + x - log sqrt(2 pi); computed
// directly and as R_{1,1}(x), asserting agreement to 1e-9.
double binet_mu(double x);

// Partial-fraction resummation of f - T_n for N = 1 on 0 < w < 2 pi:
//   f(w) - T_n(w) = 2 (-1)^{J-1} w^{2J} sum_p (2 pi p)^{2-2J} / ((2 pi p)^2 + w^2)
// with J = floor(n/2) + 1.
double remainder_closed_form_N1(int n, double w);

// Density in (-1)^{m-1} R_{2,2m}(w) = int_0^inf e^{-wt} t^{2m-2} nu_m(t) dt.
double nu_m(int m, double t);

// Sign scan of (f - T_order)(t) over the grid, against the expected-positive
// orientation for even orders ((-1)^{order/2-1} for N = 2, (-1)^{order/2} for
// N = 3); odd orders are scanned as-is and typically refute.
ClassReport integrand_positivity_scan(int N, int order, const Grid& grid);

}  // namespace specfun
