#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "specfun/errors.hpp"
#include "specfun/halfplane.hpp"
#include "specfun/invgamma.hpp"
#include "specfun/special.hpp"

using namespace specfun;

namespace {

// Digamma on the real line via the recursion psi(x) = psi(x + 1) - 1/x,
// which steps negative arguments into the region the complex evaluator
// accepts.
double psi_real_shift(double x) {
    double acc = 0.0;
    while (x <= 0.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    return polygamma(0, Complex(x, 0.0)).real() + acc;
}

int strip_index(Complex zeta) { return static_cast<int>(std::floor(-zeta.imag() / M_PI)); }

}  // namespace

TEST_CASE("extremal points interlace the poles and kill digamma") {
    auto table = extremal_points(5);
    REQUIRE(table.entries.size() == 6);

    const double frozen[6] = {1.4616321449683611,  -0.5040830082644554, -1.5734984731623904,
                              -2.6107208684441443, -3.6352933664369012, -4.6532377617431422};
    for (int k = 0; k <= 5; ++k) {
        const auto& e = table.entries[k];
        CHECK(e.k == k);
        CHECK(e.x == doctest::Approx(frozen[k]).epsilon(1e-13));
        CHECK(std::abs(psi_real_shift(e.x)) < 1e-12);
        CHECK(e.log_abs_gamma == doctest::Approx(std::lgamma(e.x)).epsilon(1e-13));
        if (k >= 1) {
            CHECK(e.x > -static_cast<double>(k));
            CHECK(e.x < -static_cast<double>(k) + 1.0);
        }
    }
    CHECK(table.entries[0].x > 1.46163);
    CHECK(table.entries[0].x < 1.46164);
}

TEST_CASE("extremal points are local minima of the gamma modulus") {
    auto table = extremal_points(4);
    for (const auto& e : table.entries) {
        CHECK(std::lgamma(e.x + 1e-4) > e.log_abs_gamma);
        CHECK(std::lgamma(e.x - 1e-4) > e.log_abs_gamma);
    }
}

TEST_CASE("extremal table rejects a negative order") {
    CHECK_THROWS_AS(extremal_points(-1), DomainError);
}

TEST_CASE("principal inversion round trips an interior point") {
    Complex w0(3.0, 2.0);
    Complex back = invert_log_gamma(log_gamma_principal(w0));
    CHECK(std::abs(back - w0) < 1e-12);

    Complex again = invert_log_gamma(log_gamma_principal(w0));
    CHECK(again == back);
}

TEST_CASE("real factorial target inverts to the integer preimage") {
    Complex five = invert_log_gamma(Complex(std::log(24.0), 0.0));
    CHECK(std::abs(five.real() - 5.0) < 1e-12);
    CHECK(std::abs(five.imag()) < 1e-12);
}

TEST_CASE("real targets below the minimum image follow the seed") {
    // log Gamma = log sqrt(pi) has two positive real preimages; the seed
    // selects the basin.
    Complex target(0.5 * std::log(M_PI), 0.0);
    Complex low = invert_log_gamma(target, Complex(0.4, 0.0));
    CHECK(low.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(low.imag()) < 1e-12);

    Complex high = invert_log_gamma(target, Complex(2.5, 0.0));
    CHECK(high.real() == doctest::Approx(2.865149664976).epsilon(1e-9));
    CHECK(std::lgamma(high.real()) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-10));
}

TEST_CASE("random upper half-plane points round trip through the inverse") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> angle(0.0, M_PI), radius(1.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        double th = angle(rng), r = radius(rng);
        Complex w(r * std::cos(th), r * std::sin(th) + 1e-3);
        Complex back = invert_log_gamma(log_gamma_principal(w));
        CHECK(std::abs(back - w) / (1.0 + std::abs(w)) < 1e-10);
    }
}

TEST_CASE("strip targets round trip in both directions") {
    // Targets below the real axis with strip indices 0 and 1.
    for (Complex zeta : {Complex(0.3, -1.2), Complex(0.2, -4.0)}) {
        Complex w = invert_log_gamma(zeta);
        CHECK(w.imag() > 0.0);
        CHECK(std::abs(log_gamma_principal(w) - zeta) < 1e-10);
    }

    // Preimages straddling the negative real axis land in successive strips.
    Complex wa(-1.5, 0.5);
    Complex za = log_gamma_principal(wa);
    CHECK(strip_index(za) == 1);
    CHECK(std::abs(invert_log_gamma(za) - wa) < 1e-10);

    Complex wb(-2.5, 0.4);
    Complex zb = log_gamma_principal(wb);
    CHECK(strip_index(zb) == 2);
    CHECK(std::abs(invert_log_gamma(zb) - wb) < 1e-10);
}

TEST_CASE("seeded inversion rejects a seed outside the closed upper half-plane") {
    CHECK_THROWS_AS(invert_log_gamma(Complex(1.0, 0.0), Complex(0.0, -0.5)), DomainEscape);
}

TEST_CASE("branch inverses satisfy the alternating gamma identity") {
    for (int k = 0; k <= 2; ++k) {
        double sgn = (k % 2 == 0) ? -1.0 : 1.0;
        for (double x : {-3.0, -1.0, -0.3, 0.0, 0.3, 1.0, 3.0}) {
            for (double y : {0.03, 0.3, 1.0, 3.0, 30.0}) {
                Complex z(x, y);
                Complex g = branch_inverse(k, z);
                CHECK(g.imag() > 0.0);
                CHECK(std::abs(gamma_complex(g) - sgn * z) / std::abs(z) < 1e-10);
            }
        }
    }
}

TEST_CASE("branch inverses recover forward-evaluated preimages") {
    const Complex seeds[3] = {Complex(0.5, 0.3), Complex(-1.5, 0.5), Complex(-2.5, 0.4)};
    for (int k = 0; k <= 2; ++k) {
        Complex w0 = seeds[k];
        Complex zeta = log_gamma_principal(w0);
        REQUIRE(strip_index(zeta) == k);
        Complex z = std::exp(zeta + Complex(0.0, (k + 1) * M_PI));
        REQUIRE(z.imag() > 0.0);
        Complex g = branch_inverse(k, z);
        CHECK(std::abs(g - w0) / (1.0 + std::abs(w0)) < 1e-10);
    }
}

TEST_CASE("branch inverses map the upper half-plane into itself") {
    for (int k = 0; k <= 2; ++k) {
        ComplexMap gk = [k](Complex z) { return branch_inverse(k, z); };
        CHECK(verify_pick(gk).verified());
    }
}

TEST_CASE("branch arguments outside the domain are rejected") {
    CHECK_THROWS_AS(branch_inverse(-1, Complex(0.0, 1.0)), DomainError);
    CHECK_THROWS_AS(branch_inverse(0, Complex(1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(branch_inverse(0, Complex(0.5, -0.2)), DomainError);
}
