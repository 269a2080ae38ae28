#include "specfun/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace specfun {

namespace {

Complex eval_checked(const ComplexMap& f, Complex z) {
    Complex w;
    try {
        w = f(z);
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "map failed at z = (" << z.real() << ", " << z.imag() << "): " << e.what();
        throw EvaluationError(os.str());
    }
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        std::ostringstream os;
        os << "map non-finite at z = (" << z.real() << ", " << z.imag() << ")";
        throw EvaluationError(os.str());
    }
    return w;
}

// Integral of kernel * density over one piece, complex kernel in two passes.
Complex piece_integral(const DensityPiece& p, const std::function<Complex(double)>& kernel,
                       const QuadratureConfig& base) {
    QuadratureConfig cfg = base;
    if (p.singular_lower && std::isfinite(p.lower)) cfg.breakpoints.push_back(p.lower);
    if (p.singular_upper && std::isfinite(p.upper)) cfg.breakpoints.push_back(p.upper);
    const auto& density = p.density;
    double re = integrate([&kernel, &density](double t) { return kernel(t).real() * density(t); },
                          p.lower, p.upper, cfg)
                    .value;
    double im = integrate([&kernel, &density](double t) { return kernel(t).imag() * density(t); },
                          p.lower, p.upper, cfg)
                    .value;
    return Complex(re, im);
}

// Density evaluation that survives quadrature nodes landing on integers.
double ratio_density_clamped(double s) {
    double nearest = std::round(s);
    double dist = std::abs(s - nearest);
    if (dist < 2e-12) s = nearest + (s >= nearest ? 2e-12 : -2e-12);
    if (s <= 0.0) s = 2e-12;
    return log_gamma_ratio_density(s);
}

// integral_0^inf d(s)/(s+x) ds for the log Gamma ratio density: the origin
// cell and the tail in the v = log s variable (the density varies like
// 1/(v^2+pi^2) there), unit cells with the double-exponential rule in between.
// Tail model: cell-averaged numerator s + log sqrt(2 pi) - 1/(6s).
double ratio_density_integral(double x) {
    const double T = 200.0;
    QuadratureConfig origin_cfg;
    origin_cfg.abs_tol = 1e-10;
    origin_cfg.rel_tol = 1e-9;
    double origin = integrate(
                        [x](double v) {
                            double s = std::exp(v);
                            return ratio_density_clamped(s) * s / (s + x);
                        },
                        -INFINITY, 0.0, origin_cfg)
                        .value;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-9;
    cfg.rel_tol = 1e-8;
    for (int k = 1; k <= static_cast<int>(T); ++k) cfg.breakpoints.push_back(k);
    double cells = integrate([x](double s) { return ratio_density_clamped(s) / (s + x); }, 1.0,
                             T, cfg)
                       .value;
    const double C = kLogSqrtTwoPi;
    QuadratureConfig tail_cfg;
    tail_cfg.abs_tol = 1e-10;
    tail_cfg.rel_tol = 1e-9;
    tail_cfg.tail = TailDecay::algebraic;
    double tail = integrate(
                      [x, C](double v) {
                          double ev = std::exp(-v);
                          return (1.0 + C * ev - ev * ev / 6.0) /
                                 ((v * v + M_PI * M_PI) * (1.0 + x * ev));
                      },
                      std::log(T), INFINITY, tail_cfg)
                      .value;
    return origin + cells + tail;
}

double g_ratio_direct(double x) {
    return log_barnes_g1p_fast(Complex(x, 0.0)).real() / (x * x * std::log(x));
}

// integral_0^inf dG(s)/(s+x) ds for the Barnes ratio boundary density: analytic
// origin model below t0 (dG ~ a1/(t((log t)^2+pi^2)), a1 = (log 2pi - 1)/2),
// extracted density on unit cells to T, leading-order 3/4 tail model beyond.
double g_density_integral(const ComplexMap& ratio, double x) {
    const double t0 = 0.01;
    const double T = 60.0;
    const double a1 = 0.5 * (std::log(2.0 * M_PI) - 1.0);
    double origin = a1 / (M_PI * x) * (M_PI / 2.0 + std::atan(std::log(t0) / M_PI));
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-4;
    cfg.rel_tol = 1e-3;
    cfg.breakpoints.push_back(t0);
    for (int k = 1; k <= static_cast<int>(T); ++k) cfg.breakpoints.push_back(k);
    double cells = integrate(
                       [&ratio, x](double t) {
                           return std::max(0.0, pick_boundary_density(ratio, -t)) / (t + x);
                       },
                       t0, T, cfg)
                       .value;
    QuadratureConfig tail_cfg;
    tail_cfg.abs_tol = 1e-6;
    tail_cfg.rel_tol = 1e-5;
    tail_cfg.tail = TailDecay::algebraic;
    double tail = integrate(
                      [x](double v) {
                          double ev = std::exp(-v);
                          return 0.75 / ((v * v + M_PI * M_PI) * (1.0 + x * ev));
                      },
                      std::log(T), INFINITY, tail_cfg)
                      .value;
    return origin + cells + tail;
}

}  // namespace

std::vector<Complex> HalfPlaneGrid::points() const {
    if (!(r_min > 0.0) || !(r_min < r_max)) throw DomainError("grid moduli must satisfy 0 < min < max");
    if (n_r < 2 || n_theta < 2) throw DomainError("grid needs at least two points per axis");
    if (!(theta_min > 0.0) || !(theta_max < M_PI) || !(theta_min < theta_max))
        throw DomainError("grid angles must lie inside (0, pi)");
    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(n_r) * static_cast<size_t>(n_theta));
    double la = std::log(r_min), lb = std::log(r_max);
    for (int i = 0; i < n_r; ++i) {
        double r = std::exp(la + (lb - la) * i / (n_r - 1));
        for (int j = 0; j < n_theta; ++j) {
            double th = theta_min + (theta_max - theta_min) * j / (n_theta - 1);
            pts.push_back(std::polar(r, th));
        }
    }
    return pts;
}

ClassReport verify_pick(const ComplexMap& f, const HalfPlaneGrid& grid, double tol) {
    ClassReport rep;
    rep.class_label = ClassLabel::Pick;
    rep.grid = grid.radial_grid();
    rep.tol = tol;
    double worst = INFINITY;
    Complex worst_z;
    for (Complex z : grid.points()) {
        double im = eval_checked(f, z).imag();
        if (im < worst) {
            worst = im;
            worst_z = z;
        }
    }
    if (worst >= -tol) {
        rep.verdict = Verdict::verified_at_samples;
    } else {
        rep.verdict = Verdict::refuted;
        rep.witness = Witness{worst_z, 0, worst};
    }
    return rep;
}

double pick_boundary_density(const ComplexMap& f, double x, double scale) {
    static const double kappa[4] = {1e-1, 5e-2, 2.5e-2, 1.25e-2};
    if (scale <= 0.0) {
        scale = std::min(1.0, std::abs(x));
        if (scale < 1e-8) scale = 1e-8;
    }
    std::vector<std::pair<double, double>> samples;
    samples.reserve(4);
    for (double k : kappa) {
        double y = k * scale;
        samples.emplace_back(y, eval_checked(f, Complex(x, y)).imag());
    }
    return extrapolate_limit(samples).value / M_PI;
}

PickTriple extract_pick_triple(const ComplexMap& f, double y_max,
                               const std::vector<double>& y_ladder) {
    if (y_ladder.size() < 3) throw UsageError("slope ladder needs at least 3 heights");
    std::vector<std::pair<double, double>> samples;
    samples.reserve(y_ladder.size());
    for (double lam : y_ladder) {
        double y = lam * y_max;
        if (!(y > 0.0)) throw DomainError("ladder heights must be positive");
        Complex r = eval_checked(f, Complex(0.0, y)) / Complex(0.0, y);
        samples.emplace_back(1.0 / y, r.real());
    }
    LimitResult lr = extrapolate_limit(samples);
    if (!(std::abs(lr.error_estimate) <= 1e-5 * (1.0 + std::abs(lr.value))))
        throw ExtrapolationError("slope ladder did not stabilize");
    double a = lr.value;
    if (a < 0.0) {
        if (a < -1e-6) throw ExtrapolationError("extracted slope is negative");
        a = 0.0;
    }
    PickTriple t;
    t.a = a;
    t.b = eval_checked(f, Complex(0.0, 1.0)).real();
    DensityPiece p;
    p.lower = -INFINITY;
    p.upper = INFINITY;
    p.density = [f](double s) { return std::max(0.0, pick_boundary_density(f, s)); };
    t.measure.density_pieces.push_back(p);
    return t;
}

Complex evaluate_pick_rep(const PickTriple& triple, Complex z) {
    if (z.imag() < 0.0) throw DomainError("evaluation point below the real axis");
    if (triple.a < 0.0) throw DomainError("linear coefficient must be >= 0");
    triple.measure.validate();
    auto kernel = [z](double t) { return 1.0 / (t - z) - t / (t * t + 1.0); };
    Complex acc = triple.a * z + Complex(triple.b, 0.0);
    for (const PointMass& m : triple.measure.point_masses) {
        acc += m.weight * kernel(m.location);
    }
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-9;
    cfg.rel_tol = 1e-8;
    cfg.tail = TailDecay::algebraic;
    for (const DensityPiece& p : triple.measure.density_pieces) {
        acc += piece_integral(p, kernel, cfg);
    }
    return acc;
}

double evaluate_stieltjes(const StieltjesRep& rep, double x) {
    if (!(x > 0.0)) throw DomainError("evaluation requires x > 0");
    if (!(rep.lambda > 0.0)) throw DomainError("order must be > 0");
    if (rep.c < 0.0) throw DomainError("constant term must be >= 0");
    rep.measure.validate();
    for (const PointMass& m : rep.measure.point_masses) {
        if (m.location < -1e-12) throw DomainError("measure support must lie in [0, inf)");
    }
    for (const DensityPiece& p : rep.measure.density_pieces) {
        if (p.lower < -1e-9) throw DomainError("measure support must lie in [0, inf)");
    }
    double lambda = rep.lambda;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-11;
    cfg.rel_tol = 1e-10;
    cfg.tail = TailDecay::algebraic;
    return rep.c + rep.measure.integrate_against(
                       [lambda, x](double t) { return std::pow(std::max(t, 0.0) + x, -lambda); },
                       cfg);
}

double log_gamma_ratio_density(double s) {
    if (!(s > 0.0)) throw DomainError("density defined for s > 0");
    double nearest = std::round(s);
    if (std::abs(s - nearest) < 1e-12 && nearest >= 1.0)
        throw SingularPoint("density has a log singularity at integers");
    double k = std::ceil(s);
    double log_abs_gamma;
    if (s < 1.0) {
        log_abs_gamma = log_gamma_principal(Complex(1.0 - s, 0.0)).real();
    } else {
        // Reflection with exact argument reduction for |sin(pi s)|.
        double frac = s - std::floor(s);
        double sinabs = std::sin(M_PI * std::min(frac, 1.0 - frac));
        log_abs_gamma = std::log(M_PI) - std::log(sinabs) -
                        log_gamma_principal(Complex(s, 0.0)).real();
    }
    double l = std::log(s);
    return (log_abs_gamma + (k - 1.0) * l) / (s * (l * l + M_PI * M_PI));
}

ClassReport verify_logGamma_ratio_representation(const std::vector<double>& x_samples,
                                                 double tol) {
    ClassReport rep;
    rep.class_label = ClassLabel::Pick;
    rep.tol = tol;
    rep.orders_checked = static_cast<int>(x_samples.size());
    double worst = 0.0;
    double worst_x = 0.0;
    double worst_diff = 0.0;
    for (double x : x_samples) {
        if (!(x > 0.0)) throw DomainError("samples must be positive");
        if (std::abs(x - 1.0) <= 1e-3)
            throw DomainError("x near 1 excluded (removable singularity of x log x)");
        double direct = log_gamma_principal(Complex(x + 1.0, 0.0)).real() / (x * std::log(x));
        double route = 1.0 - ratio_density_integral(x);
        double rel = std::abs(direct - route) / std::max(std::abs(direct), 1e-300);
        if (rel > worst) {
            worst = rel;
            worst_x = x;
            worst_diff = direct - route;
        }
    }
    if (worst <= tol) {
        rep.verdict = Verdict::verified_at_samples;
    } else {
        rep.verdict = Verdict::refuted;
        rep.witness = Witness{Complex(worst_x, 0.0), 0, worst_diff};
    }
    return rep;
}

ClassReport g_function_ratio_check(const HalfPlaneGrid& z_grid,
                                   const std::vector<double>& x_samples, double tol) {
    auto ratio = [](Complex z) { return log_barnes_g1p_fast(z) / (z * z * std::log(z)); };
    ClassReport rep;
    rep.class_label = ClassLabel::Pick;
    rep.grid = z_grid.radial_grid();
    rep.tol = tol;

    // Stieltjes-type sign: Im (1/2 - ratio) <= tol on the grid.
    double worst = INFINITY;
    Complex worst_z;
    for (Complex z : z_grid.points()) {
        double im = eval_checked(ratio, z).imag();
        if (im < worst) {
            worst = im;
            worst_z = z;
        }
    }
    if (worst < -tol) {
        rep.verdict = Verdict::refuted;
        rep.witness = Witness{worst_z, 0, worst};
        return rep;
    }

    for (double s : x_samples) {
        if (!(s > 0.0)) throw DomainError("samples must be positive");
        double d = pick_boundary_density(ratio, -s);
        if (d < -tol) {
            rep.verdict = Verdict::refuted;
            rep.witness = Witness{Complex(-s, 0.0), 0, d};
            return rep;
        }
    }

    const double kConsistencyTol = 5e-2;
    for (double x : x_samples) {
        if (std::abs(x - 1.0) <= 1e-3) continue;
        double direct = g_ratio_direct(x);
        double route = 0.5 - g_density_integral(ratio, x);
        double diff = direct - route;
        if (std::abs(diff) > kConsistencyTol) {
            rep.verdict = Verdict::refuted;
            rep.witness = Witness{Complex(x, 0.0), 0, diff};
            return rep;
        }
    }
    rep.verdict = Verdict::verified_at_samples;
    return rep;
}

ClassReport lowner_psd(const RealFn& f, const RealFn& fprime,
                       const std::vector<double>& points, double tol) {
    if (!f || !fprime) throw DomainError("function and derivative both required");
    size_t n = points.size();
    if (n == 0) throw DomainError("at least one point required");
    if (n > 12) throw DomainError("at most 12 points supported");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double sep = std::abs(points[i] - points[j]);
            if (sep <= 1e-12 * std::max({1.0, std::abs(points[i]), std::abs(points[j])}))
                throw DegeneratePoints("kernel points must be pairwise distinct");
        }
    }
    std::vector<double> fv(n);
    for (size_t i = 0; i < n; ++i) fv[i] = f(points[i]);
    Eigen::MatrixXd K(n, n);
    for (size_t i = 0; i < n; ++i) {
        K(i, i) = fprime(points[i]);
        for (size_t j = i + 1; j < n; ++j) {
            double v = (fv[i] - fv[j]) / (points[i] - points[j]);
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    double maxabs = K.cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
    double lmin = es.eigenvalues()(0);
    double thr = tol * std::max(maxabs, 1.0);
    ClassReport rep;
    rep.class_label = ClassLabel::Pick;
    rep.tol = thr;
    rep.orders_checked = static_cast<int>(n);
    if (lmin >= -thr) {
        rep.verdict = Verdict::verified_at_samples;
    } else {
        Eigen::Index idx = 0;
        es.eigenvectors().col(0).cwiseAbs().maxCoeff(&idx);
        rep.verdict = Verdict::refuted;
        rep.witness = Witness{Complex(points[static_cast<size_t>(idx)], 0.0),
                              static_cast<int>(n), lmin};
    }
    return rep;
}

}  // namespace specfun
