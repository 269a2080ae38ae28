#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "specfun/errors.hpp"

namespace specfun {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Truncated power series with exact rational coefficients, indexed from t^0.
// All arithmetic is exact; truncation_order is the highest retained power.
class PowerSeries {
  public:
    PowerSeries() : c_(1, Rational(0)) {}
    explicit PowerSeries(std::vector<Rational> coeffs);

    size_t truncation_order() const { return c_.size() - 1; }
    const Rational& operator[](size_t k) const { return c_.at(k); }
    const std::vector<Rational>& coefficients() const { return c_; }

    PowerSeries add(const PowerSeries& o) const;
    PowerSeries scale(const Rational& r) const;
    PowerSeries multiply(const PowerSeries& o) const;
    // Long division; supports a divisor with zero leading coefficients as long
    // as the numerator vanishes at least to the same order.
    PowerSeries divide(const PowerSeries& o) const;
    PowerSeries truncate(size_t order) const;
    PowerSeries pow(unsigned n) const;

    double coefficient_as_double(size_t k) const;

    static PowerSeries one(size_t order);
    static PowerSeries t_power(size_t p, size_t order);
    // exp(t) - 1 up to the given order.
    static PowerSeries expm1_series(size_t order);
    static PowerSeries geometric(size_t order);  // 1/(1-t), for cross-checks

  private:
    std::vector<Rational> c_;
};

Rational binomial_rational(unsigned n, unsigned k);
BigInt factorial_int(unsigned n);

// Classical Bernoulli numbers B_k (B_1 = -1/2), exact, via the generating
// series t/(e^t - 1).
std::vector<Rational> bernoulli_numbers(size_t max_index);

}  // namespace specfun
