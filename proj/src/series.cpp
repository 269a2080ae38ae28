#include "specfun/series.hpp"

#include <algorithm>

namespace specfun {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, Rational(0));
}

PowerSeries PowerSeries::add(const PowerSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rational> r(n);
    for (size_t k = 0; k < n; ++k) r[k] = c_[k] + o.c_[k];
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::scale(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= s;
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::multiply(const PowerSeries& o) const {
    size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rational> r(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::divide(const PowerSeries& o) const {
    size_t vd = 0;
    while (vd < o.c_.size() && o.c_[vd] == 0) ++vd;
    if (vd == o.c_.size()) throw DegenerateDivisor("division by the zero series");
    for (size_t k = 0; k < vd && k < c_.size(); ++k) {
        if (c_[k] != 0)
            throw DegenerateDivisor("quotient would have a pole: divisor vanishes to higher order");
    }
    size_t n = std::min(c_.size(), o.c_.size());
    if (vd >= n) throw DegenerateDivisor("divisor valuation exceeds truncation order");
    size_t m = n - vd;  // quotient coefficients 0..m-1
    std::vector<Rational> q(m, Rational(0));
    for (size_t k = 0; k < m; ++k) {
        Rational acc = (vd + k < c_.size()) ? c_[vd + k] : Rational(0);
        for (size_t j = 0; j < k; ++j) acc -= q[j] * o.c_[vd + k - j];
        q[k] = acc / o.c_[vd];
    }
    return PowerSeries(std::move(q));
}

PowerSeries PowerSeries::truncate(size_t order) const {
    std::vector<Rational> r(c_.begin(), c_.begin() + std::min(c_.size(), order + 1));
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::pow(unsigned n) const {
    PowerSeries acc = PowerSeries::one(truncation_order());
    for (unsigned i = 0; i < n; ++i) acc = acc.multiply(*this);
    return acc;
}

double PowerSeries::coefficient_as_double(size_t k) const {
    return c_.at(k).convert_to<double>();
}

PowerSeries PowerSeries::one(size_t order) {
    std::vector<Rational> r(order + 1, Rational(0));
    r[0] = 1;
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::t_power(size_t p, size_t order) {
    std::vector<Rational> r(order + 1, Rational(0));
    if (p <= order) r[p] = 1;
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::expm1_series(size_t order) {
    std::vector<Rational> r(order + 1, Rational(0));
    BigInt fact = 1;
    for (size_t k = 1; k <= order; ++k) {
        fact *= BigInt(k);
        r[k] = Rational(BigInt(1), fact);
    }
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::geometric(size_t order) {
    std::vector<Rational> r(order + 1, Rational(1));
    return PowerSeries(std::move(r));
}

Rational binomial_rational(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    BigInt num = 1, den = 1;
    for (unsigned j = 0; j < std::min(k, n - k); ++j) {
        num *= BigInt(n - j);
        den *= BigInt(j + 1);
    }
    return Rational(num, den);
}

BigInt factorial_int(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= BigInt(k);
    return f;
}

std::vector<Rational> bernoulli_numbers(size_t max_index) {
    PowerSeries num = PowerSeries::t_power(1, max_index + 1);
    PowerSeries den = PowerSeries::expm1_series(max_index + 1);
    PowerSeries q = num.divide(den);
    std::vector<Rational> b(max_index + 1, Rational(0));
    BigInt fact = 1;
    for (size_t k = 0; k <= max_index; ++k) {
        if (k > 0) fact *= BigInt(k);
        b[k] = q[k] * Rational(fact, BigInt(1));
    }
    return b;
}

}  // namespace specfun
