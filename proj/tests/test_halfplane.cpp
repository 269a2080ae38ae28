#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "specfun/asymptotics.hpp"
#include "specfun/halfplane.hpp"

using specfun::ClassLabel;
using specfun::Complex;
using specfun::ComplexMap;
using specfun::DensityPiece;
using specfun::HalfPlaneGrid;
using specfun::PointMass;
using specfun::Verdict;

namespace {

Complex log_gamma_ratio(Complex z) {
    return specfun::log_gamma_principal(z + 1.0) / (z * std::log(z));
}

double barnes_ratio_real(double x) {
    return specfun::log_barnes_g1p_fast(Complex(x, 0.0)).real() / (x * x * std::log(x));
}

}  // namespace

TEST_CASE("half-plane verification separates Pick maps from the rest") {
    auto rep = specfun::verify_pick([](Complex z) { return std::log(z); });
    CHECK(rep.verified());
    CHECK(rep.class_label == ClassLabel::Pick);

    auto sq = specfun::verify_pick([](Complex z) { return z * z; });
    CHECK(sq.refuted());
    REQUIRE(sq.witness.has_value());
    CHECK(std::abs(sq.witness->point) > 999.0);
    CHECK(std::arg(sq.witness->point) > 2.0);
    CHECK(std::arg(sq.witness->point) < 2.7);
    CHECK(sq.witness->value < -9.9e5);

    CHECK(specfun::verify_pick(log_gamma_ratio).verified());

    CHECK_THROWS_AS(specfun::verify_pick([](Complex) -> Complex {
                        throw specfun::PoleError("boom");
                    }),
                    specfun::EvaluationError);
    CHECK_THROWS_AS(specfun::verify_pick([](Complex) { return Complex(NAN, 0.0); }),
                    specfun::EvaluationError);
}

TEST_CASE("half-plane grid validates its shape") {
    HalfPlaneGrid g;
    g.r_min = 0.0;
    CHECK_THROWS_AS(g.points(), specfun::DomainError);
    g = HalfPlaneGrid{};
    g.n_r = 1;
    CHECK_THROWS_AS(g.points(), specfun::DomainError);
    g = HalfPlaneGrid{};
    g.theta_max = M_PI;
    CHECK_THROWS_AS(g.points(), specfun::DomainError);
    g = HalfPlaneGrid{};
    g.n_r = 3;
    g.n_theta = 2;
    CHECK(g.points().size() == 6);
}

TEST_CASE("triple extraction recovers slope intercept and boundary density") {
    auto affine = [](Complex z) { return 2.0 * z + 3.0; };
    auto tri = specfun::extract_pick_triple(affine);
    CHECK(tri.a == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(tri.b == doctest::Approx(3.0).epsilon(1e-12));
    REQUIRE(tri.measure.density_pieces.size() == 1);
    CHECK(std::abs(tri.measure.density_pieces[0].density(5.0)) < 1e-9);

    auto lg = [](Complex z) { return std::log(z); };
    auto tlog = specfun::extract_pick_triple(lg);
    CHECK(std::abs(tlog.a) < 1e-9);
    CHECK(std::abs(tlog.b) < 1e-12);
    CHECK(specfun::pick_boundary_density(lg, -2.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(specfun::pick_boundary_density(lg, 3.0)) < 1e-8);
    // Close to the origin the ladder must shrink with |x| to stay accurate.
    CHECK(specfun::pick_boundary_density(lg, -0.04) == doctest::Approx(1.0).epsilon(1e-4));

    auto ci = [](Complex) { return Complex(0.0, 1.0); };
    auto tci = specfun::extract_pick_triple(ci);
    CHECK(std::abs(tci.a) < 1e-12);
    CHECK(std::abs(tci.b) < 1e-12);
    for (double x : {-5.0, 0.3, 7.0}) {
        CHECK(specfun::pick_boundary_density(ci, x) ==
              doctest::Approx(1.0 / M_PI).epsilon(1e-9));
    }

    CHECK_THROWS_AS(specfun::extract_pick_triple(affine, 1e6, {1.0, 0.5}),
                    specfun::UsageError);
}

TEST_CASE("representation round trips reproduce the original maps") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> lr(std::log(0.3), std::log(3.0));
    std::uniform_real_distribution<double> th(0.3, 2.8);
    std::vector<Complex> zs;
    for (int i = 0; i < 20; ++i) zs.push_back(std::polar(std::exp(lr(rng)), th(rng)));

    std::vector<ComplexMap> maps = {
        [](Complex z) { return 2.0 * z + 3.0; },
        [](Complex z) { return std::log(z); },
        [](Complex) { return Complex(0.0, 1.0); },
    };
    for (const auto& f : maps) {
        auto tri = specfun::extract_pick_triple(f);
        for (Complex z : zs) {
            Complex got = specfun::evaluate_pick_rep(tri, z);
            CHECK(std::abs(got - f(z)) < 1e-5);
        }
    }
}

TEST_CASE("pick representation evaluation matches closed forms") {
    specfun::PickTriple neg_axis;
    DensityPiece unit;
    unit.lower = -INFINITY;
    unit.upper = 0.0;
    unit.density = [](double) { return 1.0; };
    neg_axis.measure.density_pieces.push_back(unit);
    CHECK(std::abs(specfun::evaluate_pick_rep(neg_axis, Complex(2.0, 0.0)) -
                   Complex(std::log(2.0), 0.0)) < 1e-8);
    CHECK(std::abs(specfun::evaluate_pick_rep(neg_axis, Complex(0.0, 1.0)) -
                   Complex(0.0, M_PI / 2.0)) < 1e-8);

    specfun::PickTriple linear;
    linear.a = 1.0;
    CHECK(std::abs(specfun::evaluate_pick_rep(linear, Complex(0.0, 1.0)) -
                   Complex(0.0, 1.0)) < 1e-12);

    specfun::PickTriple cauchy;
    DensityPiece flat;
    flat.lower = -INFINITY;
    flat.upper = INFINITY;
    flat.density = [](double) { return 1.0 / M_PI; };
    cauchy.measure.density_pieces.push_back(flat);
    CHECK(std::abs(specfun::evaluate_pick_rep(cauchy, Complex(0.0, 1.0)) -
                   Complex(0.0, 1.0)) < 1e-8);
    CHECK(std::abs(specfun::evaluate_pick_rep(cauchy, Complex(0.7, 0.4)) -
                   Complex(0.0, 1.0)) < 1e-8);

    CHECK_THROWS_AS(specfun::evaluate_pick_rep(linear, Complex(0.0, -1.0)),
                    specfun::DomainError);
    specfun::PickTriple bad;
    bad.a = -0.5;
    CHECK_THROWS_AS(specfun::evaluate_pick_rep(bad, Complex(0.0, 1.0)),
                    specfun::DomainError);
}

TEST_CASE("stieltjes evaluation handles masses densities and domain checks") {
    specfun::StieltjesRep mass1;
    mass1.measure.point_masses.push_back(PointMass{0.0, 1.0});
    CHECK(specfun::evaluate_stieltjes(mass1, 2.0) == doctest::Approx(0.5).epsilon(1e-12));

    specfun::StieltjesRep box;
    DensityPiece p;
    p.lower = 0.0;
    p.upper = 1.0;
    p.density = [](double) { return 1.0; };
    box.measure.density_pieces.push_back(p);
    CHECK(specfun::evaluate_stieltjes(box, 1.0) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-9));
    double prev = INFINITY;
    for (double x : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double v = specfun::evaluate_stieltjes(box, x);
        CHECK(v < prev);
        prev = v;
    }

    specfun::StieltjesRep mass2 = mass1;
    mass2.lambda = 2.0;
    CHECK(specfun::evaluate_stieltjes(mass2, 2.0) == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(specfun::evaluate_stieltjes(mass1, 0.0), specfun::DomainError);
    specfun::StieltjesRep badl = mass1;
    badl.lambda = 0.0;
    CHECK_THROWS_AS(specfun::evaluate_stieltjes(badl, 1.0), specfun::DomainError);
    specfun::StieltjesRep badc = mass1;
    badc.c = -1.0;
    CHECK_THROWS_AS(specfun::evaluate_stieltjes(badc, 1.0), specfun::DomainError);
    specfun::StieltjesRep negmass;
    negmass.measure.point_masses.push_back(PointMass{-2.0, 1.0});
    CHECK_THROWS_AS(specfun::evaluate_stieltjes(negmass, 1.0), specfun::DomainError);
    specfun::StieltjesRep negpiece;
    DensityPiece q = p;
    q.lower = -1.0;
    negpiece.measure.density_pieces.push_back(q);
    CHECK_THROWS_AS(specfun::evaluate_stieltjes(negpiece, 1.0), specfun::DomainError);
}

TEST_CASE("measure validation rejects malformed specs") {
    specfun::MeasureSpec neg_weight;
    neg_weight.point_masses.push_back(PointMass{1.0, -0.5});
    CHECK_THROWS_AS(neg_weight.validate(), specfun::DomainError);

    specfun::MeasureSpec neg_density;
    DensityPiece p;
    p.lower = 0.0;
    p.upper = 1.0;
    p.density = [](double) { return -1.0; };
    neg_density.density_pieces.push_back(p);
    CHECK_THROWS_AS(neg_density.validate(), specfun::NonPositive);

    specfun::MeasureSpec overlap;
    DensityPiece a;
    a.lower = 0.0;
    a.upper = 2.0;
    a.density = [](double) { return 1.0; };
    DensityPiece b = a;
    b.lower = 1.0;
    b.upper = 3.0;
    overlap.density_pieces.push_back(a);
    overlap.density_pieces.push_back(b);
    CHECK_THROWS_AS(overlap.validate(), specfun::DomainError);
}

TEST_CASE("ratio boundary density closed form and sign structure") {
    double d_half = specfun::log_gamma_ratio_density(0.5);
    double l = std::log(0.5);
    CHECK(d_half == doctest::Approx(std::log(std::sqrt(M_PI)) /
                                    (0.5 * (l * l + M_PI * M_PI)))
                        .epsilon(1e-12));

    CHECK_THROWS_AS(specfun::log_gamma_ratio_density(1.0), specfun::SingularPoint);
    CHECK_THROWS_AS(specfun::log_gamma_ratio_density(2.0), specfun::SingularPoint);
    CHECK_THROWS_AS(specfun::log_gamma_ratio_density(3.0), specfun::SingularPoint);
    CHECK_THROWS_AS(specfun::log_gamma_ratio_density(0.0), specfun::DomainError);
    CHECK_THROWS_AS(specfun::log_gamma_ratio_density(-1.5), specfun::DomainError);

    for (int j = 0; j < 50; ++j) {
        double s = 0.05 + 0.5931 * j;
        if (std::abs(s - std::round(s)) < 1e-3) continue;
        CHECK(specfun::log_gamma_ratio_density(s) > 0.0);
    }

    // Reflection + Stirling rewrite of the numerator, cross-checked through
    // the Binet function route.
    for (double s : {0.7, 3.3, 7.8, 15.2}) {
        double ls = std::log(s);
        double lhs = specfun::log_gamma_ratio_density(s) * s * (ls * ls + M_PI * M_PI);
        double frac = s - std::floor(s);
        double sinabs = std::sin(M_PI * std::min(frac, 1.0 - frac));
        double rhs = s + std::log(M_PI) - specfun::kLogSqrtTwoPi - specfun::binet_mu(s) +
                     (0.5 - frac) * ls - std::log(sinabs);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }

    CHECK(specfun::log_gamma_ratio_density(2.0 + 1e-8) >
          specfun::log_gamma_ratio_density(2.0 + 1e-4));
    CHECK(specfun::log_gamma_ratio_density(2.0 + 1e-4) >
          specfun::log_gamma_ratio_density(2.3));

    double far = specfun::log_gamma_ratio_density(100.5);
    double lf = std::log(100.5);
    CHECK(far * (lf * lf + M_PI * M_PI) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("ratio representation route agrees with direct values") {
    auto rep = specfun::verify_logGamma_ratio_representation({0.5, 2.0, 5.0, 10.0, 100.0},
                                                             1e-6);
    CHECK(rep.verified());
    CHECK(rep.orders_checked == 5);

    double direct2 = specfun::log_gamma_principal(Complex(3.0, 0.0)).real() /
                     (2.0 * std::log(2.0));
    CHECK(direct2 == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(specfun::verify_logGamma_ratio_representation({1.0005}, 1e-6),
                    specfun::DomainError);
    CHECK_THROWS_AS(specfun::verify_logGamma_ratio_representation({-2.0}, 1e-6),
                    specfun::DomainError);

    auto tight = specfun::verify_logGamma_ratio_representation({2.0}, 1e-12);
    CHECK(tight.refuted());
    REQUIRE(tight.witness.has_value());
    CHECK(std::abs(tight.witness->value) < 1e-5);

    auto far = specfun::verify_logGamma_ratio_representation({100.0, 1000.0}, 1e-6);
    CHECK(far.verified());
    auto direct = [](double x) {
        return specfun::log_gamma_principal(Complex(x + 1.0, 0.0)).real() /
               (x * std::log(x));
    };
    CHECK(std::abs(direct(1000.0) - 1.0) < std::abs(direct(100.0) - 1.0));
}

TEST_CASE("barnes ratio checks sign boundary density and coarse consistency") {
    HalfPlaneGrid grid;
    grid.n_r = 40;
    grid.n_theta = 40;
    auto rep = specfun::g_function_ratio_check(grid, {0.5, 2.0, 10.0}, 1e-8);
    CHECK(rep.verified());

    CHECK(std::abs(barnes_ratio_real(2.0)) < 1e-12);
    CHECK(std::abs(barnes_ratio_real(1000.0) - 0.5) <
          std::abs(barnes_ratio_real(100.0) - 0.5));
}

TEST_CASE("divided difference kernel separates monotone from convex") {
    auto logf = [](double x) { return std::log(x); };
    auto logd = [](double x) { return 1.0 / x; };
    auto rep = specfun::lowner_psd(logf, logd, {1.0, 2.0, 4.0, 8.0});
    CHECK(rep.verified());
    CHECK(rep.orders_checked == 4);

    auto idf = [](double x) { return x; };
    auto idd = [](double) { return 1.0; };
    CHECK(specfun::lowner_psd(idf, idd, {0.5, 1.0, 2.0, 3.0}).verified());

    auto sqf = [](double x) { return x * x; };
    auto sqd = [](double x) { return 2.0 * x; };
    auto bad = specfun::lowner_psd(sqf, sqd, {1.0, 2.0});
    CHECK(bad.refuted());
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->value == doctest::Approx(3.0 - std::sqrt(10.0)).epsilon(1e-9));
    CHECK(bad.witness->order == 2);

    CHECK_THROWS_AS(specfun::lowner_psd(logf, logd, {1.0, 1.0}), specfun::DegeneratePoints);
    CHECK_THROWS_AS(specfun::lowner_psd(logf, logd, {1.0, 1.0 + 1e-13}),
                    specfun::DegeneratePoints);
    std::vector<double> many(13);
    std::iota(many.begin(), many.end(), 1.0);
    CHECK_THROWS_AS(specfun::lowner_psd(logf, logd, many), specfun::DomainError);
    CHECK_THROWS_AS(specfun::lowner_psd(logf, logd, {}), specfun::DomainError);
    CHECK(specfun::lowner_psd(logf, logd, {1.0}).verified());
}

TEST_CASE("negative reciprocal of the ratio stays in the class") {
    HalfPlaneGrid grid;
    grid.n_r = 30;
    grid.n_theta = 30;
    auto rep = specfun::verify_pick(
        [](Complex z) { return -1.0 / log_gamma_ratio(z); }, grid, 1e-9);
    CHECK(rep.verified());
}

TEST_CASE("boundary extraction matches the closed form density") {
    const double pts[] = {0.31, 0.44, 0.57, 0.68, 1.27, 1.38, 1.49, 1.62, 1.74, 2.31,
                          2.42, 2.58, 2.71, 3.29, 3.37, 3.55, 3.66, 4.28, 4.45, 4.61};
    for (double s : pts) {
        double extracted = specfun::pick_boundary_density(log_gamma_ratio, -s);
        double closed = specfun::log_gamma_ratio_density(s);
        CHECK(std::abs(extracted - closed) <= 1e-4);
    }
}

TEST_CASE("half-plane analysis is deterministic") {
    double a = specfun::log_gamma_ratio_density(2.5);
    double b = specfun::log_gamma_ratio_density(2.5);
    CHECK(a == b);
    auto t1 = specfun::extract_pick_triple([](Complex z) { return std::log(z); });
    auto t2 = specfun::extract_pick_triple([](Complex z) { return std::log(z); });
    CHECK(t1.a == t2.a);
    CHECK(t1.b == t2.b);
    double d1 = specfun::pick_boundary_density(log_gamma_ratio, -2.31);
    double d2 = specfun::pick_boundary_density(log_gamma_ratio, -2.31);
    CHECK(d1 == d2);
}
