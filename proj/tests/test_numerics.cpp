#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "specfun/derivatives.hpp"
#include "specfun/grid.hpp"
#include "specfun/quadrature.hpp"
#include "specfun/series.hpp"

using namespace specfun;

namespace {

// Bernoulli numbers by the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0,
// independent of the generating-series division route.
std::vector<Rational> bernoulli_by_recurrence(size_t kmax) {
    std::vector<Rational> b(kmax + 1, Rational(0));
    b[0] = 1;
    for (size_t m = 1; m <= kmax; ++m) {
        Rational acc(0);
        for (size_t j = 0; j < m; ++j) acc += binomial_rational(static_cast<unsigned>(m + 1), static_cast<unsigned>(j)) * b[j];
        b[m] = -acc / Rational(BigInt(m + 1), BigInt(1));
    }
    return b;
}

constexpr double kEulerGamma = 0.5772156649015328606;

}  // namespace

TEST_CASE("power series: geometric quotient") {
    PowerSeries one = PowerSeries::one(12);
    std::vector<Rational> d(13, Rational(0));
    d[0] = 1;
    d[1] = -1;
    PowerSeries q = one.divide(PowerSeries(d));
    for (size_t k = 0; k <= 12; ++k) CHECK(q[k] == Rational(1));
}

TEST_CASE("power series: Bernoulli generating function matches recurrence oracle") {
    auto oracle = bernoulli_by_recurrence(24);
    auto got = bernoulli_numbers(24);
    REQUIRE(got.size() == oracle.size());
    for (size_t k = 0; k < got.size(); ++k) CHECK(got[k] == oracle[k]);
    CHECK(got[1] == Rational(-1, 2));
    CHECK(got[2] == Rational(1, 6));
    CHECK(got[12] == Rational(-691, 2730));
}

TEST_CASE("power series: degenerate divisors") {
    PowerSeries z(std::vector<Rational>(8, Rational(0)));
    CHECK_THROWS_AS(PowerSeries::one(7).divide(z), DegenerateDivisor);
    CHECK_THROWS_AS(PowerSeries::one(7).divide(PowerSeries::t_power(1, 7)), DegenerateDivisor);
}

TEST_CASE("power series: divide undoes multiply") {
    std::vector<Rational> ac{Rational(3), Rational(-1, 2), Rational(7, 3), Rational(0), Rational(5)};
    std::vector<Rational> bc{Rational(1, 4), Rational(2), Rational(-3, 7), Rational(1), Rational(1)};
    PowerSeries a{ac}, b{bc};
    PowerSeries ab = a.multiply(b);
    PowerSeries back = ab.divide(b);
    for (size_t k = 0; k <= back.truncation_order(); ++k) CHECK(back[k] == a[k]);
}

TEST_CASE("integrate: exponential over the half line") {
    auto r = integrate([](double t) { return std::exp(-t); }, 0.0, INFINITY);
    CHECK(std::abs(r.value - 1.0) < 1e-11);
}

TEST_CASE("integrate: endpoint log singularity") {
    auto r = integrate([](double t) { return std::log(t); }, 0.0, 1.0);
    CHECK(std::abs(r.value + 1.0) < 1e-9);
}

TEST_CASE("integrate: Frullani-type value log 2") {
    auto f = [](double t) {
        if (t < 1e-8) return std::exp(-t) * (1.0 - 0.5 * t);
        return std::exp(-t) * (-std::expm1(-t)) / t;
    };
    auto r = integrate(f, 0.0, INFINITY);
    CHECK(std::abs(r.value - std::log(2.0)) < 1e-11);
}

TEST_CASE("integrate: bound ordering") {
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0), DomainError);
}

TEST_CASE("integrate: non-integrable singularity reports partial progress") {
    try {
        integrate([](double t) { return 1.0 / t; }, 0.0, 1.0);
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
        CHECK(std::isfinite(e.partial));
        CHECK(e.error_estimate > 0.0);
    }
}

TEST_CASE("integrate: linearity") {
    QuadratureConfig cfg;
    cfg.tail = TailDecay::algebraic;  // the combination decays only like 1/t^2
    auto f = [](double t) { return std::exp(-t); };
    auto g = [](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); };
    auto combo = [&](double t) { return 2.0 * f(t) + 3.0 * g(t); };
    double lhs = integrate(combo, 0.0, INFINITY, cfg).value;
    double rhs =
        2.0 * integrate(f, 0.0, INFINITY, cfg).value + 3.0 * integrate(g, 0.0, INFINITY, cfg).value;
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("integrate: declared breakpoint at a kink") {
    QuadratureConfig cfg;
    cfg.breakpoints = {1.0};
    auto r = integrate([](double t) { return std::abs(t - 1.0); }, 0.0, 2.0, cfg);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
}

TEST_CASE("integrate: algebraic tail map for slowly decaying integrands") {
    QuadratureConfig cfg;
    cfg.tail = TailDecay::algebraic;
    auto r = integrate([](double t) { return 1.0 / (1.0 + t * t); }, 0.0, INFINITY, cfg);
    CHECK(std::abs(r.value - M_PI / 2.0) < 1e-11);
}

TEST_CASE("integrate: deterministic across repeated runs") {
    auto f = [](double t) { return std::exp(-t) * std::cos(t); };
    auto a = integrate(f, 0.0, INFINITY);
    auto b = integrate(f, 0.0, INFINITY);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
}

TEST_CASE("derivative_n: third derivative of exp") {
    double d = derivative_n([](double x) { return std::exp(x); }, 1.0, 3);
    CHECK(std::abs(d - std::exp(1.0)) < 1e-8);
}

TEST_CASE("derivative_n: second derivative of 1/x at 2") {
    double d = derivative_n([](double x) { return 1.0 / x; }, 2.0, 2);
    CHECK(std::abs(d - 0.25) < 1e-9);
}

TEST_CASE("derivative_n: log-gamma slope at 1 is psi(2)") {
    double d = derivative_n([](double x) { return std::lgamma(x + 1.0); }, 1.0, 1);
    CHECK(std::abs(d - (1.0 - kEulerGamma)) < 1e-8);
}

TEST_CASE("derivative_n: analytic chain bypasses differencing") {
    DerivChain chain = [](double x, int) { return std::exp(x); };
    double d = derivative_n([](double x) { return std::exp(x); }, 0.3, 7, chain);
    CHECK(d == std::exp(0.3));
}

TEST_CASE("derivative_n: order zero evaluates the function") {
    auto f = [](double x) { return std::sin(x) + 2.0; };
    CHECK(derivative_n(f, 0.7, 0) == f(0.7));
}

TEST_CASE("derivative_n: guard rails") {
    CHECK_THROWS_AS(derivative_n([](double x) { return x; }, 1e-300, 2), StepUnderflow);
    CHECK_THROWS_AS(derivative_n([](double x) { return x; }, 1.0, 9), DomainError);
}

TEST_CASE("extrapolate_limit: linear samples") {
    std::vector<std::pair<double, double>> s{{0.1, 1.1}, {0.05, 1.05}, {0.025, 1.025}};
    auto r = extrapolate_limit(s);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
}

TEST_CASE("extrapolate_limit: cosine samples") {
    std::vector<std::pair<double, double>> s;
    for (double h : {0.2, 0.1, 0.05, 0.025}) s.push_back({h, std::cos(h)});
    auto r = extrapolate_limit(s);
    CHECK(std::abs(r.value - 1.0) < 1e-5);
}

TEST_CASE("extrapolate_limit: boundary argument of the logarithm") {
    std::vector<std::pair<double, double>> s;
    for (double h : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
        std::complex<double> z(-1.0, h);
        s.push_back({h, std::imag(std::log(z)) / M_PI});
    }
    auto r = extrapolate_limit(s);
    CHECK(std::abs(r.value - 1.0) < 1e-7);
}

TEST_CASE("extrapolate_limit: needs three samples") {
    std::vector<std::pair<double, double>> s{{0.1, 1.0}, {0.05, 1.0}};
    CHECK_THROWS_AS(extrapolate_limit(s), InsufficientSamples);
}

TEST_CASE("grid: point generation and validation") {
    Grid lin(0.0, 1.0, 5, Spacing::linear);
    auto p = lin.points();
    CHECK(p.size() == 5);
    CHECK(p[0] == 0.0);
    CHECK(p[4] == 1.0);
    CHECK(std::abs(p[2] - 0.5) < 1e-15);
    Grid lg(1e-2, 1e2, 5, Spacing::log);
    auto q = lg.points();
    CHECK(std::abs(q[2] - 1.0) < 1e-12);
    CHECK_THROWS_AS(Grid(1.0, 0.5, 10, Spacing::linear), DomainError);
    CHECK_THROWS_AS(Grid(-1.0, 1.0, 10, Spacing::log), DomainError);
    Grid parsed = Grid::parse("0.5:10:20:log");
    CHECK(parsed.count == 20);
    CHECK(parsed.spacing == Spacing::log);
    CHECK_THROWS_AS(Grid::parse("1:2:3"), UsageError);
}
