#include "specfun/cases.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "specfun/halfplane.hpp"
#include "specfun/monotone.hpp"
#include "specfun/quadrature.hpp"
#include "specfun/special.hpp"

namespace specfun {

namespace {

double sign_pm(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

double lgamma_real(double x) { return log_gamma_principal(Complex(x, 0.0)).real(); }

double psi_real(int m, double x) { return polygamma(m, Complex(x, 0.0)).real(); }

// rho^{(m)} from the closed form rho' = -1/(x(1+x)^2).
double rho_deriv(double x, int m) {
    if (m == 0) return rho_value(x);
    double xp = x + 1.0;
    double fact = 1.0;  // (m-1)!
    for (int i = 2; i < m; ++i) fact *= static_cast<double>(i);
    double base = std::pow(x, -m) - std::pow(xp, -m) - static_cast<double>(m) * std::pow(xp, -m - 1);
    return sign_pm(m) * fact * base;
}

// h^{(0..top)} at x via the recursion h^{(n+1)} = a sum C(n,j) h^{(j)} rho^{(n-j)}.
std::vector<double> h_ladder(double a, double x, int top) {
    std::vector<double> h(static_cast<size_t>(top) + 1);
    std::vector<double> r(static_cast<size_t>(std::max(top, 1)));
    for (int m = 0; m < top; ++m) r[static_cast<size_t>(m)] = rho_deriv(x, m);
    h[0] = h_value(a, x);
    for (int n = 0; n < top; ++n) {
        double acc = 0.0;
        for (int j = 0; j <= n; ++j)
            acc += binom(n, j) * h[static_cast<size_t>(j)] * r[static_cast<size_t>(n - j)];
        h[static_cast<size_t>(n) + 1] = a * acc;
    }
    return h;
}

DerivChain h_prime_chain(double a) {
    return [a](double x, int n) { return h_ladder(a, x, n + 1)[static_cast<size_t>(n) + 1]; };
}

// s tau(s) at s = e^{-v}. The 1/v^2 decay is why tau integrals run in v
// space.
double tau_log_kernel(double v) {
    // s tau(s) -> 1 as s -> 1-, and below v = 1e-12 the exponential rounds
    // onto the endpoint itself, so pin the limit there.
    if (v < 1e-12) return 1.0;
    double s = std::exp(-v);
    return s * tau_density(s);
}

// Integrals over (0, 1) against tau become [0, v0] in v plus a tail where
// the kernel is 1/((v-1)^2 + pi^2) to within e^{-v0} and the weight is
// frozen at s = 0, so the tail integrates to atan(pi/(v0-1))/pi exactly.
double tau_weighted_integral(const std::function<double(double)>& weight) {
    const double v0 = 60.0;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-10;
    cfg.rel_tol = 1e-9;
    cfg.breakpoints = {1.0, 10.0};
    auto f = [&](double v) { return tau_log_kernel(v) * weight(std::exp(-v)); };
    double head = integrate(f, 0.0, v0, cfg).value;
    double tail = weight(0.0) * std::atan(M_PI / (v0 - 1.0)) / M_PI;
    return head + tail;
}

// (1 - e^{-t})/t, the Laplace transform of the unit-interval indicator.
double sat_ratio(double t) { return -std::expm1(-t) / t; }

double require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw DomainError(what);
    return v;
}

// sigma^{(m)} for the gamma quotient: lambda/x + psi(x) - psi(x+lambda).
double sigma_deriv(double lambda, double x, int m) {
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= static_cast<double>(i);
    return lambda * sign_pm(m) * fact * std::pow(x, -m - 1) + psi_real(m, x) -
           psi_real(m, x + lambda);
}

// g^{(0..top)} via g' = g sigma.
std::vector<double> g_lambda_ladder(double lambda, double x, int top) {
    std::vector<double> g(static_cast<size_t>(top) + 1);
    std::vector<double> s(static_cast<size_t>(std::max(top, 1)));
    for (int m = 0; m < top; ++m) s[static_cast<size_t>(m)] = sigma_deriv(lambda, x, m);
    g[0] = g_lambda_value(lambda, x);
    for (int n = 0; n < top; ++n) {
        double acc = 0.0;
        for (int j = 0; j <= n; ++j)
            acc += binom(n, j) * g[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)];
        g[static_cast<size_t>(n) + 1] = acc;
    }
    return g;
}

}  // namespace

UnitBallReport unit_ball_sequence(int n_max) {
    if (n_max < 3) throw DomainError("n_max must be >= 3");
    if (n_max > 300) throw DomainError("volumes leave double range past n = 300");
    UnitBallReport rep;
    const double log_pi = std::log(M_PI);
    const double sqrt_e = std::exp(0.5);
    for (int n = 2; n <= n_max; ++n) {
        double log_vol = 0.5 * n * log_pi - lgamma_real(0.5 * n + 1.0);
        UnitBallRow row;
        row.n = n;
        row.volume = std::exp(log_vol);
        row.scaled = std::exp(log_vol / (n * std::log(static_cast<double>(n))));
        rep.rows.push_back(row);
    }
    rep.decreasing = true;
    rep.log_convex = true;
    rep.gap_to_sqrt_e_shrinks = true;
    for (size_t i = 0; i + 1 < rep.rows.size(); ++i) {
        if (!(rep.rows[i + 1].scaled < rep.rows[i].scaled)) rep.decreasing = false;
        if (!(std::abs(rep.rows[i + 1].scaled - sqrt_e) < std::abs(rep.rows[i].scaled - sqrt_e)))
            rep.gap_to_sqrt_e_shrinks = false;
    }
    for (size_t i = 0; i + 2 < rep.rows.size(); ++i) {
        double mid = std::log(rep.rows[i].scaled) + std::log(rep.rows[i + 2].scaled) -
                     2.0 * std::log(rep.rows[i + 1].scaled);
        if (!(mid >= -1e-12)) rep.log_convex = false;
    }
    return rep;
}

double h_value(double a, double x) {
    if (a < 0.0) throw DomainError("a must be >= 0");
    require_positive(x, "x must be positive");
    return std::exp(a * x * std::log1p(1.0 / x));
}

double rho_value(double x) {
    require_positive(x, "x must be positive");
    return std::log1p(1.0 / x) - 1.0 / (1.0 + x);
}

double rho_laplace_route(double x) {
    require_positive(x, "x must be positive");
    // Integrand (1-e^{-t})/t - e^{-t} under s = x t to keep unit decay rate.
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-11;
    cfg.tail = TailDecay::exponential;
    auto f = [x](double s) {
        double t = s / x;
        return std::exp(-s) * (sat_ratio(t) - std::exp(-t)) / x;
    };
    return integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg).value;
}

double g_ratio_value(double x) {
    require_positive(x, "x must be positive");
    double xp = 1.0 + x;
    return 1.0 / (x * xp * xp) / rho_value(x);
}

double tau_density(double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("support is (0, 1)");
    // Boundary values of -rho'/rho reflected to the upper half-plane, with
    // the unit point mass 1/(1-z) removed before extraction.
    ComplexMap p = [](Complex z) {
        Complex w = -z;
        Complex rho = std::log((w + 1.0) / w) - 1.0 / (1.0 + w);
        Complex drho = -1.0 / (w * (1.0 + w) * (1.0 + w));
        return -drho / rho - 1.0 / (1.0 - z);
    };
    // Nearest structure off the cut: the removed pole at 1 and the cut end
    // at 0. The ladder has to stay well inside both.
    return pick_boundary_density(p, s, std::min(s, 1.0 - s));
}

double envelope_value(double a, double t) {
    if (a < 0.0) throw DomainError("a must be >= 0");
    require_positive(t, "t must be positive");
    double mixed = tau_weighted_integral([t](double s) { return std::exp(-s * t); });
    return (1.0 + a) * std::exp(-t) + mixed - a * sat_ratio(t);
}

std::vector<double> h_moment_sequence(int n_max) {
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        out.push_back(tau_weighted_integral([n](double s) { return std::pow(1.0 - s, n); }));
    return out;
}

double h_threshold_bisect(ThresholdCriterion, double lo, double hi, double tol) {
    if (!(lo > 0.0 && hi > lo)) throw DomainError("bracket must satisfy 0 < lo < hi");
    require_positive(tol, "tol must be positive");
    // The mixed integral does not depend on a, so it is tabulated once and
    // the bisection itself is arithmetic.
    Grid tg(1e-3, 1e3, 200, Spacing::log);
    std::vector<double> ts = tg.points();
    std::vector<double> mixed(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) {
        double t = ts[i];
        mixed[i] = tau_weighted_integral([t](double s) { return std::exp(-s * t); });
    }
    auto admissible = [&](double a) {
        for (size_t i = 0; i < ts.size(); ++i) {
            double t = ts[i];
            double f = (1.0 + a) * std::exp(-t) + mixed[i] - a * sat_ratio(t);
            if (!(f >= -tol)) return false;
        }
        return true;
    };
    if (!admissible(lo) || admissible(hi))
        throw BracketError("bracket does not straddle the envelope threshold");
    while (hi - lo > 1e-3) {
        double mid = 0.5 * (lo + hi);
        (admissible(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ClassReport h_derivative_cm(double a, const Grid& grid, int max_order, double tol) {
    require_positive(a, "a must be positive");
    return check_cm(nullptr, h_prime_chain(a), 0.0, grid, max_order, tol);
}

ClassReport h_derivative_stieltjes(double a, const Grid& grid, double tol) {
    require_positive(a, "a must be positive");
    return check_stieltjes_order(nullptr, h_prime_chain(a), 1.0, 2, grid, tol);
}

ClassReport h_cm_threshold_check() {
    const double tol = 1e-7;
    Grid grid(0.05, 30.0, 40, Spacing::log);
    ClassReport below = h_derivative_cm(2.25, grid, 6, tol);
    ClassReport above = h_derivative_cm(2.35, grid, 6, tol);
    ClassReport order_one = h_derivative_stieltjes(1.0, grid, tol);
    ClassReport rep;
    rep.class_label = ClassLabel::CM;
    rep.grid = grid;
    rep.orders_checked = 6;
    rep.tol = tol;
    bool ordered = below.verified() && above.refuted() && order_one.verified();
    rep.verdict = ordered ? Verdict::verified_at_samples : Verdict::inconclusive;
    // Surface whichever sub-scan contradicts the expected ordering; a clean
    // scan just above the threshold leaves no witness to show.
    if (below.refuted())
        rep.witness = below.witness;
    else if (order_one.refuted())
        rep.witness = order_one.witness;
    else
        rep.witness = above.witness;
    return rep;
}

HFamilyState h_family_state(double a, int n_moments) {
    if (a < 0.0) throw DomainError("a must be >= 0");
    if (n_moments < 0) throw DomainError("n_moments must be >= 0");
    HFamilyState state;
    state.a = a;
    Grid sg(0.02, 0.98, 25, Spacing::linear);
    for (double s : sg.points()) {
        double d = tau_density(s);
        if (!(d >= 0.0)) throw AssertionError("recovered density dips negative");
        state.tau_samples.emplace_back(s, d);
    }
    state.moments = h_moment_sequence(n_moments);
    if (std::abs(state.moments.front() - 1.0) > 1e-6)
        throw AssertionError("recovered density mass differs from one");
    for (size_t i = 0; i + 1 < state.moments.size(); ++i)
        if (!(state.moments[i + 1] <= state.moments[i] + 1e-12))
            throw AssertionError("moments fail to decrease");
    return state;
}

double g_lambda_value(double lambda, double x) {
    require_positive(lambda, "lambda must be positive");
    require_positive(x, "x must be positive");
    return std::exp(lambda * std::log(x) + lgamma_real(x) - lgamma_real(x + lambda));
}

double sigma_lambda_value(double lambda, double x) {
    require_positive(lambda, "lambda must be positive");
    require_positive(x, "x must be positive");
    return sigma_deriv(lambda, x, 0);
}

double xi_value(double lambda, double t) {
    require_positive(lambda, "lambda must be positive");
    require_positive(t, "t must be positive");
    return lambda - std::expm1(-lambda * t) / std::expm1(-t);
}

GLambdaReport g_lambda_suite(double lambda, const Grid& grid, double tol) {
    require_positive(lambda, "lambda must be positive");
    if (lambda == 1.0) throw DomainError("lambda = 1 is degenerate; use the value functions");
    require_positive(tol, "tol must be positive");
    GLambdaReport rep;
    rep.lambda = lambda;
    double dir = lambda > 1.0 ? 1.0 : -1.0;

    Grid tg(0.05, 30.0, 50, Spacing::log);
    std::vector<double> tv = tg.points();
    rep.xi_sign_ok = true;
    rep.xi_monotone = true;
    for (size_t i = 0; i < tv.size(); ++i) {
        double v = xi_value(lambda, tv[i]);
        if (!(dir * v > 0.0)) rep.xi_sign_ok = false;
        if (i > 0 && !(dir * (v - xi_value(lambda, tv[i - 1])) > 0.0)) rep.xi_monotone = false;
    }

    rep.monotone_direction = true;
    for (double x : grid.points())
        if (!(dir * sigma_lambda_value(lambda, x) > 0.0)) rep.monotone_direction = false;

    DerivChain sigma_chain = [lambda, dir](double x, int n) {
        return dir * sigma_deriv(lambda, x, n);
    };
    rep.sigma_cm = check_cm(nullptr, sigma_chain, 1.0, grid, 6, tol);

    if (lambda > 1.0) {
        RealFn g = [lambda](double x) { return g_lambda_value(lambda, x); };
        DerivChain g_chain = [lambda](double x, int n) {
            return g_lambda_ladder(lambda, x, n)[static_cast<size_t>(n)];
        };
        rep.membership = check_bernstein_order(g, g_chain, lambda - 1.0, grid, 5, tol);
    } else {
        DerivChain log_chain = [lambda](double x, int n) {
            if (n == 0)
                return lambda * std::log(x) + lgamma_real(x) - lgamma_real(x + lambda);
            return sigma_deriv(lambda, x, n - 1);
        };
        rep.membership = check_stieltjes_order(nullptr, log_chain, 2.0, 2, grid, tol);
    }
    return rep;
}

double gamma_ratio_log(double a, double b, double x) {
    require_positive(a, "a must be positive");
    require_positive(b, "b must be positive");
    require_positive(x, "x must be positive");
    return lgamma_real(x) + lgamma_real(x + a + b) - lgamma_real(x + a) - lgamma_real(x + b);
}

double gamma_ratio_integral(double a, double b, double x) {
    require_positive(a, "a must be positive");
    require_positive(b, "b must be positive");
    require_positive(x, "x must be positive");
    // e^{-xt} (1-e^{-at})(1-e^{-bt}) / (t (1-e^{-t})) dt under s = x t.
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-11;
    cfg.tail = TailDecay::exponential;
    auto f = [a, b, x](double s) {
        double t = s / x;
        double num = std::expm1(-a * t) * std::expm1(-b * t);
        double den = -std::expm1(-t) * t * x;
        return std::exp(-s) * num / den;
    };
    return integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg).value;
}

ClassReport gamma_ratio_representation(double a, double b, const std::vector<double>& x_samples,
                                       double tol) {
    require_positive(a, "a must be positive");
    require_positive(b, "b must be positive");
    if (x_samples.empty()) throw DomainError("x_samples must be nonempty");
    require_positive(tol, "tol must be positive");
    for (double x : x_samples) {
        double direct = gamma_ratio_log(a, b, x);
        double laplace = gamma_ratio_integral(a, b, x);
        if (std::abs(direct - laplace) > 1e-8 * (1.0 + std::abs(direct)))
            throw AssertionError("Laplace route disagrees with the direct logs");
    }

    RealFn density = [a, b](double t) {
        return std::expm1(-a * t) * std::expm1(-b * t) / (-std::expm1(-t) * t * t);
    };
    ClassReport cm = check_cm(density, nullptr, 0.0, Grid(0.05, 20.0, 25, Spacing::log), 6, tol);
    if (!cm.verified()) throw AssertionError("Laplace density failed the alternating scan");

    DerivChain ratio_chain = [a, b](double x, int n) {
        if (n == 0) return gamma_ratio_log(a, b, x);
        return psi_real(n - 1, x) + psi_real(n - 1, x + a + b) - psi_real(n - 1, x + a) -
               psi_real(n - 1, x + b);
    };
    return check_stieltjes_order(nullptr, ratio_chain, 2.0, 2, Grid(0.5, 20.0, 25, Spacing::log),
                                 tol);
}

}  // namespace specfun
