#include "specfun/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "specfun/quadrature.hpp"
#include "specfun/special.hpp"

namespace specfun {

namespace {

using Fk = std::function<double(double, int)>;

// Unified derivative access: analytic chain when present, numeric otherwise.
Fk make_fk(const RealFn& f, const DerivChain& chain) {
    if (chain) return Fk(chain);
    return [f](double x, int n) { return n == 0 ? f(x) : derivative_n(f, x, n); };
}

// p (p-1) ... (p-j+1); exact zero once a nonnegative integer p is exhausted.
double falling(double p, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= p - static_cast<double>(i);
    return r;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

double sign_pm(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

ClassReport base_report(ClassLabel label, const Grid& grid, int orders, double tol) {
    ClassReport rep;
    rep.class_label = label;
    rep.grid = grid;
    rep.orders_checked = orders;
    rep.tol = tol;
    return rep;
}

// Scan depth for each c_k in the Widder-Sokal criterion and for the
// semigroup maps in exp_bernstein_check.
constexpr int kInnerScanOrder = 4;

void require_positive_tol(double tol) {
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
}

void validate_bernstein_rep(const BernsteinRep& rep) {
    if (rep.a < 0.0 || rep.b < 0.0) throw DomainError("coefficients must be nonnegative");
    if (!(rep.lambda > 0.0)) throw DomainError("order lambda must be positive");
    for (const auto& pm : rep.measure.point_masses)
        if (!(pm.location > 0.0)) throw DomainError("measure support must lie in (0, inf)");
    for (const auto& piece : rep.measure.density_pieces)
        if (piece.lower < 0.0) throw DomainError("measure support must lie in (0, inf)");
    rep.measure.validate();
}

}  // namespace

ClassReport check_cm(const RealFn& f, const DerivChain& chain, double alpha,
                     const Grid& grid, int max_order, double tol) {
    if (!f && !chain) throw DomainError("check_cm requires a function or derivative chain");
    if (max_order < 0 || max_order > 8) throw DomainError("check_cm supports orders 0..8");
    require_positive_tol(tol);
    ClassReport rep = base_report(alpha == 0.0 ? ClassLabel::CM : ClassLabel::CMAlpha,
                                  grid, max_order, tol);
    rep.alpha = alpha;
    Fk fk = make_fk(f, chain);

    // Derivatives of x^alpha f: exact product rule through the chain when one
    // is present, a single numeric stencil on the product otherwise. mag
    // collects the summed term magnitudes: the product rule cancels near
    // zeros, and below its rounding floor a sign carries no information.
    auto g_deriv = [&](double x, int n, double& mag) -> double {
        mag = 0.0;
        if (alpha == 0.0) return fk(x, n);
        if (chain) {
            double acc = 0.0;
            for (int j = 0; j <= n; ++j) {
                double term =
                    binom(n, j) * falling(alpha, j) * std::pow(x, alpha - j) * fk(x, n - j);
                acc += term;
                mag += std::abs(term);
            }
            return acc;
        }
        RealFn prod = [&f, alpha](double t) { return std::pow(t, alpha) * f(t); };
        return derivative_n(prod, x, n);
    };

    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (double x : grid.points()) {
        double mag = 0.0;
        double scale = std::abs(g_deriv(x, 0, mag)) + 1.0;
        for (int n = 0; n <= max_order; ++n) {
            double signed_val = sign_pm(n) * g_deriv(x, n, mag);
            if (!(signed_val >= -(tol * scale + 32.0 * eps * mag))) {
                rep.verdict = Verdict::refuted;
                rep.witness = Witness{{x, 0.0}, n, signed_val};
                return rep;
            }
        }
    }
    rep.verdict = Verdict::verified_at_samples;
    return rep;
}

ClassReport check_lcm(const RealFn& f, const DerivChain& chain, const Grid& grid,
                      int max_order, double tol) {
    if (!f && !chain) throw DomainError("check_lcm requires a function or derivative chain");
    int cap = chain ? 8 : 7;  // the ratio scan consumes f^(m+1)
    if (max_order < 0 || max_order > cap)
        throw DomainError("check_lcm order cap is 8 with a chain, 7 numeric");
    require_positive_tol(tol);
    ClassReport rep = base_report(ClassLabel::LCM, grid, max_order, tol);
    Fk fk = make_fk(f, chain);
    std::vector<double> pts = grid.points();

    for (double x : pts) {
        std::vector<double> fv(static_cast<size_t>(max_order) + 2);
        for (int m = 0; m <= max_order + 1; ++m) fv[static_cast<size_t>(m)] = fk(x, m);
        if (!(fv[0] > 0.0)) throw NonPositive("logarithmic scan requires f > 0 on the grid");
        // r = f'/f from  f^{(m+1)} = sum_j C(m,j) r^{(j)} f^{(m-j)}. The
        // recursion cancels; rmag tracks the summed magnitudes so values under
        // the rounding floor are not read as sign violations.
        constexpr double eps = std::numeric_limits<double>::epsilon();
        std::vector<double> r(static_cast<size_t>(max_order) + 1);
        std::vector<double> rmag(static_cast<size_t>(max_order) + 1);
        for (int m = 0; m <= max_order; ++m) {
            double acc = fv[static_cast<size_t>(m) + 1];
            double mag = std::abs(acc);
            for (int j = 0; j < m; ++j) {
                double term =
                    binom(m, j) * r[static_cast<size_t>(j)] * fv[static_cast<size_t>(m - j)];
                acc -= term;
                mag += std::abs(term);
            }
            r[static_cast<size_t>(m)] = acc / fv[0];
            rmag[static_cast<size_t>(m)] = mag / std::abs(fv[0]);
        }
        double scale = std::abs(r[0]) + 1.0;
        for (int m = 0; m <= max_order; ++m) {
            double signed_val = sign_pm(m) * -r[static_cast<size_t>(m)];
            if (!(signed_val >= -(tol * scale + 32.0 * eps * rmag[static_cast<size_t>(m)]))) {
                rep.verdict = Verdict::refuted;
                rep.witness = Witness{{x, 0.0}, m, signed_val};
                return rep;
            }
        }
    }

    // Roots cross-check: f^{1/nr} must itself pass a shallow CM scan. Numeric
    // derivatives at loose tolerance; a failure here against a clean ratio
    // scan means the samples disagree, reported as inconclusive.
    double loose = 100.0 * tol;
    for (int nr : {1, 2, 3}) {
        RealFn root = [&fk, nr](double t) { return std::pow(fk(t, 0), 1.0 / nr); };
        for (double x : pts) {
            double scale = std::abs(root(x)) + 1.0;
            for (int m : {1, 2}) {
                double signed_val = sign_pm(m) * derivative_n(root, x, m);
                if (!(signed_val >= -loose * scale)) {
                    rep.verdict = Verdict::inconclusive;
                    rep.witness = Witness{{x, 0.0}, m, signed_val};
                    return rep;
                }
            }
        }
    }
    rep.verdict = Verdict::verified_at_samples;
    return rep;
}

ClassReport check_stieltjes_order(const RealFn& f, const DerivChain& chain,
                                  double lambda, int k_max, const Grid& grid,
                                  double tol) {
    if (!f && !chain)
        throw DomainError("check_stieltjes_order requires a function or derivative chain");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    if (k_max < 0 || k_max > 4) throw DomainError("k_max must lie in [0, 4]");
    require_positive_tol(tol);
    ClassReport rep = base_report(ClassLabel::Stieltjes, grid, k_max, tol);
    rep.lambda = lambda;
    Fk fk = make_fk(f, chain);
    int top = k_max + kInnerScanOrder;

    for (double x : grid.points()) {
        std::vector<double> fv(static_cast<size_t>(top) + 1);
        for (int m = 0; m <= top; ++m) fv[static_cast<size_t>(m)] = fk(x, m);
        for (int k = 0; k <= k_max; ++k) {
            // c_k(x) = sum_j C(k,j) falling(lambda-1+k, j) x^{k-j} f^{(k-j)},
            // differentiated termwise; falling(k-j, i) vanishes for i > k-j so
            // no negative powers of x appear. mag collects term magnitudes:
            // the sum cancels to zero identically for some inputs and below
            // its rounding floor a sign carries no information.
            auto ck_deriv = [&](int n, double& mag) {
                double acc = 0.0;
                mag = 0.0;
                for (int j = 0; j <= k; ++j) {
                    double w = binom(k, j) * falling(lambda - 1.0 + k, j);
                    int p = k - j;
                    for (int i = 0; i <= std::min(n, p); ++i) {
                        double term = w * binom(n, i) * falling(p, i) * std::pow(x, p - i) *
                                      fv[static_cast<size_t>(p + n - i)];
                        acc += term;
                        mag += std::abs(term);
                    }
                }
                return acc;
            };
            constexpr double eps = std::numeric_limits<double>::epsilon();
            double mag = 0.0;
            double scale = std::abs(ck_deriv(0, mag)) + 1.0;
            for (int n = 0; n <= kInnerScanOrder; ++n) {
                double signed_val = sign_pm(n) * ck_deriv(n, mag);
                if (!(signed_val >= -(tol * scale + 32.0 * eps * mag))) {
                    rep.verdict = Verdict::refuted;
                    rep.witness = Witness{{x, 0.0}, k, signed_val};
                    return rep;
                }
            }
        }
    }
    rep.verdict = Verdict::verified_at_samples;
    return rep;
}

ClassReport check_bernstein_order(const RealFn& g, const DerivChain& chain,
                                  double lambda, const Grid& grid,
                                  int max_order, double tol) {
    if (!g && !chain)
        throw DomainError("check_bernstein_order requires a function or derivative chain");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    if (max_order < 1 || max_order > 8)
        throw DomainError("check_bernstein_order supports orders 1..8");
    require_positive_tol(tol);
    ClassReport rep = base_report(ClassLabel::Bernstein, grid, max_order, tol);
    rep.lambda = lambda;
    Fk fk = make_fk(g, chain);

    for (double x : grid.points()) {
        double gv = fk(x, 0);
        if (gv < -tol) {
            rep.verdict = Verdict::refuted;
            rep.witness = Witness{{x, 0.0}, 0, gv};
            return rep;
        }
    }

    DerivChain shifted = [fk](double x, int n) { return fk(x, n + 1); };
    ClassReport primary = check_cm(nullptr, shifted, 1.0 - lambda, grid, max_order - 1, tol);
    if (primary.refuted()) {
        rep.verdict = Verdict::refuted;
        rep.witness = primary.witness;
        return rep;
    }
    // Companion scan: g / x^lambda stays CM for members of the class.
    ClassReport secondary = check_cm(g, chain, -lambda, grid, std::min(max_order, 4), tol);
    if (secondary.refuted()) {
        rep.verdict = Verdict::refuted;
        rep.witness = secondary.witness;
        return rep;
    }
    rep.verdict = Verdict::verified_at_samples;
    return rep;
}

double evaluate_bernstein_rep(const BernsteinRep& rep, double x) {
    if (!(x > 0.0)) throw DomainError("x must be positive");
    validate_bernstein_rep(rep);
    double lambda = rep.lambda;
    auto kernel = [lambda, x](double t) {
        double u = x * t;
        if (u < 1e-8) {
            // gamma(lambda,u)/u^lambda expanded at u = 0 keeps t -> 0 finite.
            return std::pow(x, lambda) *
                   (1.0 / lambda - u / (lambda + 1.0) + u * u / (2.0 * (lambda + 2.0)));
        }
        return incomplete_gamma(lambda, u) * std::pow(t, -lambda);
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-11;
    cfg.rel_tol = 1e-10;
    cfg.tail = TailDecay::algebraic;
    return rep.a + rep.b * std::pow(x, lambda) + rep.measure.integrate_against(kernel, cfg);
}

double xl_transform(const RealFn& g, double x) {
    if (!g) throw DomainError("xl_transform requires a function");
    if (!(x > 0.0)) throw DomainError("x must be positive");
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    cfg.tail = TailDecay::exponential;
    // Substituting s = x t folds the prefactor in and pins the decay rate at
    // one, which keeps the tail map accurate for small x.
    QuadResult q = integrate([&g, x](double s) { return std::exp(-s) * g(s / x); }, 0.0,
                             std::numeric_limits<double>::infinity(), cfg);
    if (!std::isfinite(q.value))
        throw NonConvergence("Laplace integral diverged", q.value, q.error_estimate);
    return q.value;
}

double post_widder_density(const RealFn& f, const DerivChain& chain, double t, int n) {
    if (!f && !chain)
        throw DomainError("post_widder_density requires a function or derivative chain");
    if (!(t > 0.0)) throw DomainError("t must be positive");
    if (n < 1) throw DomainError("n must be >= 1");
    if (!chain && n > 8) throw DomainError("numeric derivatives stop at n = 8");
    double x0 = static_cast<double>(n) / t;
    double d = chain ? chain(x0, n) : derivative_n(f, x0, n);
    if (d == 0.0) return 0.0;
    // (n/t)^{n+1} |f^(n)| / n! through logs; n! overflows past n = 170.
    double mag = std::exp(std::log(std::abs(d)) -
                          log_gamma_principal(Complex(static_cast<double>(n) + 1.0, 0.0)).real() +
                          (static_cast<double>(n) + 1.0) * std::log(x0));
    return sign_pm(n) * (d > 0.0 ? 1.0 : -1.0) * mag;
}

ClassReport thorin_check(const RealFn& f, const DerivChain& chain, double lambda,
                         double alpha, const Grid& grid, double tol) {
    if (!f && !chain) throw DomainError("thorin_check requires a function or derivative chain");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    if (!(alpha < lambda + 1.0)) throw DomainError("alpha must satisfy alpha < lambda + 1");
    require_positive_tol(tol);
    Fk fk = make_fk(f, chain);
    for (double x : grid.points())
        if (fk(x, 0) < -tol) throw NonPositive("thorin scan requires f >= 0 on the grid");
    // h = x^{1-lambda} f', derivatives by exact product rule through the chain.
    DerivChain hchain = [fk, lambda](double x, int m) {
        double acc = 0.0;
        for (int j = 0; j <= m; ++j)
            acc += binom(m, j) * falling(1.0 - lambda, j) * std::pow(x, 1.0 - lambda - j) *
                   fk(x, 1 + m - j);
        return acc;
    };
    ClassReport rep = check_stieltjes_order(nullptr, hchain, lambda + 1.0 - alpha, 2, grid, tol);
    rep.class_label = ClassLabel::Thorin;
    rep.lambda = lambda;
    rep.alpha = alpha;
    return rep;
}

double thorin_approximant(const BernsteinRep& rep, int n, double x) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (!(x > 0.0)) throw DomainError("x must be positive");
    validate_bernstein_rep(rep);
    double lambda = rep.lambda;
    double nn = static_cast<double>(n);
    double pref = std::exp(log_gamma_principal(Complex(lambda + nn, 0.0)).real() -
                           log_gamma_principal(Complex(nn, 0.0)).real());
    auto kernel = [lambda, nn, x](double t) {
        double u = x / (x + nn / t);
        if (u < 1e-8) {
            // B(lambda,n,u) ~ (u^lambda/lambda)(1 - lambda(n-1)u/(lambda+1));
            // u/t = x/(xt + n) stays finite as t -> 0.
            double ut = x / (x * t + nn);
            return std::pow(ut, lambda) / lambda * (1.0 - lambda * (nn - 1.0) * u / (lambda + 1.0));
        }
        return incomplete_beta(lambda, nn, u) * std::pow(t, -lambda);
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-11;
    cfg.rel_tol = 1e-10;
    cfg.tail = TailDecay::algebraic;
    return rep.a + rep.b * std::pow(x, lambda) + pref * rep.measure.integrate_against(kernel, cfg);
}

ClassReport exp_bernstein_check(const RealFn& g, const std::vector<double>& x_list,
                                const Grid& grid, double tol) {
    if (!g) throw DomainError("exp_bernstein_check requires a function");
    if (x_list.empty()) throw DomainError("x_list must be non-empty");
    for (double x : x_list)
        if (!(x > 0.0)) throw DomainError("x_list entries must be positive");
    require_positive_tol(tol);
    ClassReport rep = base_report(ClassLabel::HornBernstein, grid, kInnerScanOrder, tol);
    for (double t : grid.points())
        if (g(t) < -tol) throw NonPositive("semigroup scan requires g >= 0");
    for (double x : x_list) {
        RealFn h = [&g, x](double t) { return std::exp(-x * g(t)); };
        ClassReport sub = check_cm(h, nullptr, 0.0, grid, kInnerScanOrder, tol);
        if (sub.refuted()) {
            rep.verdict = Verdict::refuted;
            rep.witness = sub.witness;
            return rep;
        }
    }
    rep.verdict = Verdict::verified_at_samples;
    return rep;
}

}  // namespace specfun
