#include "specfun/invgamma.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "specfun/errors.hpp"
#include "specfun/special.hpp"

namespace specfun {

namespace {

// Recursion into (0, inf) keeps the series off the cut; poles at the
// nonpositive integers surface as infinities, which the brackets avoid.
double psi_real(double x) {
    double acc = 0.0;
    while (x <= 0.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    return polygamma(0, Complex(x, 0.0)).real() + acc;
}

double trigamma_real(double x) {
    double acc = 0.0;
    while (x <= 0.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    return polygamma(1, Complex(x, 0.0)).real() + acc;
}

// Root of psi on (lo, hi) where psi runs from negative to positive:
// bisection to a safe width, then Newton to the residual floor.
double psi_root(double lo, double hi) {
    double flo = psi_real(lo);
    double fhi = psi_real(hi);
    if (!(flo < 0.0 && fhi > 0.0)) throw BracketError("psi does not change sign on the bracket");
    for (int i = 0; i < 40; ++i) {
        double mid = 0.5 * (lo + hi);
        if (psi_real(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        double f = psi_real(x);
        if (std::abs(f) < 1e-14) break;
        double step = f / trigamma_real(x);
        double next = x - step;
        if (!(next > lo - 1.0 && next < hi + 1.0)) break;
        x = next;
        if (std::abs(step) < 1e-16 * std::abs(x)) break;
    }
    return x;
}

bool in_closed_domain(Complex w) {
    if (w.imag() > 0.0) return true;
    return w.imag() == 0.0 && w.real() > 0.0;
}

// Stirling-level inversion of w (log w - 1) = target. The fixed point
// contracts only once |target| is large enough for log w to exceed one;
// when the iteration fails to settle, the fixed interior point is the
// safer basin.
Complex stirling_seed(Complex target) {
    if (std::abs(target) < 3.0) return Complex(2.0, 1.0);
    Complex w = target / std::log(target + 2.0);
    double move = std::numeric_limits<double>::max();
    for (int i = 0; i < 20; ++i) {
        Complex d = std::log(w) - 1.0;
        if (std::abs(d) < 1e-8 || !std::isfinite(w.real()) || !std::isfinite(w.imag())) break;
        Complex next = target / d;
        move = std::abs(next - w);
        w = next;
    }
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return Complex(2.0, 1.0);
    if (move > 1e-2 * std::abs(w)) return Complex(2.0, 1.0);
    // The preimage lives in the closed upper half-plane; reflect strays.
    if (w.imag() < 0.0) w = std::conj(w);
    return w;
}

Complex newton_invert(Complex target, Complex w) {
    const double tol = 1e-13 * std::max(1.0, std::abs(target));
    if (!in_closed_domain(w)) throw DomainEscape("seed lies outside the closed upper half-plane");
    double r = std::abs(log_gamma_principal(w) - target);
    for (int it = 0; it < 100; ++it) {
        if (r <= tol) return w;
        Complex dw = (log_gamma_principal(w) - target) / polygamma(0, w);
        bool moved = false;
        bool escaped_only = true;
        for (double h = 1.0; h > 1e-12; h *= 0.5) {
            Complex cand = w - h * dw;
            if (!in_closed_domain(cand)) continue;
            escaped_only = false;
            double rc = std::abs(log_gamma_principal(cand) - target);
            if (rc < r) {
                w = cand;
                r = rc;
                moved = true;
                break;
            }
        }
        if (!moved) {
            if (escaped_only)
                throw DomainEscape("newton step forced out of the upper half-plane");
            throw NonConvergence("newton stalled before reaching the target", 0.0, r);
        }
    }
    throw NonConvergence("newton iteration budget exhausted", 0.0, r);
}

}  // namespace

ExtremalTable extremal_points(int k_max) {
    if (k_max < 0) throw DomainError("k_max must be >= 0");
    ExtremalTable table;
    table.entries.reserve(static_cast<size_t>(k_max) + 1);
    double x0 = psi_root(1.0, 2.0);
    table.entries.push_back({0, x0, std::lgamma(x0)});
    for (int k = 1; k <= k_max; ++k) {
        // psi runs from -inf to +inf between consecutive poles; inset the
        // bracket just enough to stay off them.
        double delta = 1e-6;
        double lo = -static_cast<double>(k) + delta;
        double hi = -static_cast<double>(k) + 1.0 - delta;
        while (!(psi_real(lo) < 0.0 && psi_real(hi) > 0.0)) {
            delta *= 1e-2;
            if (delta < 1e-14) throw BracketError("pole inset failed to bracket the psi root");
            lo = -static_cast<double>(k) + delta;
            hi = -static_cast<double>(k) + 1.0 - delta;
        }
        double xk = psi_root(lo, hi);
        table.entries.push_back({k, xk, std::lgamma(xk)});
    }
    return table;
}

// Targets whose imaginary part sits below -k pi image from near the pole at
// -k, where Gamma(w) ~ (-1)^k / (k! (w + k)); inverting that local form
// gives a seed that improves as the preimage approaches the pole.
std::optional<Complex> pole_seed(Complex target) {
    if (!(target.imag() < 0.0)) return std::nullopt;
    int k = static_cast<int>(std::floor(-target.imag() / M_PI));
    Complex z = std::exp(target + Complex(0.0, (k + 1) * M_PI));
    if (!(z.imag() > 0.0)) return std::nullopt;
    double kfact = std::tgamma(static_cast<double>(k) + 1.0);
    return Complex(-static_cast<double>(k), 0.0) - 1.0 / (kfact * z);
}

// The image of the upper half-plane is slit along Im = -k pi for
// Re >= log|Gamma(x_k)|, so a continuation path descends in a column left
// of every slit end for the target's strip, then moves horizontally
// inside the open strip. Reseeding from each previous preimage keeps
// Newton local.
Complex walk_invert(Complex target) {
    int k = static_cast<int>(std::floor(-target.imag() / M_PI));
    double re_a = target.real();
    if (k >= 1) {
        double slit_end = extremal_points(k).entries[k].log_abs_gamma;
        re_a = std::min(re_a, slit_end - 1.0);
    }
    Complex zeta(re_a, -0.5 * M_PI);
    Complex w = invert_log_gamma(zeta);
    int down = static_cast<int>(std::ceil((zeta.imag() - target.imag()) / (M_PI / 3.0)));
    for (int j = 1; j <= down; ++j) {
        double im = zeta.imag() + (target.imag() - zeta.imag()) * j / down;
        w = newton_invert(Complex(re_a, im), w);
    }
    int across = std::max(1, static_cast<int>(std::ceil(std::abs(target.real() - re_a))));
    for (int j = 1; j <= across; ++j) {
        double re = re_a + (target.real() - re_a) * j / across;
        w = newton_invert(Complex(re, target.imag()), w);
    }
    return w;
}

Complex invert_log_gamma(Complex target, std::optional<Complex> seed) {
    if (seed) return newton_invert(target, *seed);
    std::vector<Complex> attempts{stirling_seed(target)};
    if (auto p = pole_seed(target); p && in_closed_domain(*p)) attempts.push_back(*p);
    attempts.push_back(Complex(2.0, 1.0));
    for (size_t i = 0; i + 1 < attempts.size(); ++i) {
        try {
            return newton_invert(target, attempts[i]);
        } catch (const Error&) {
        }
    }
    try {
        return newton_invert(target, attempts.back());
    } catch (const Error&) {
        if (target.imag() < -0.5 * M_PI) return walk_invert(target);
        throw;
    }
}

Complex branch_inverse(int k, Complex z) {
    if (k < 0) throw DomainError("k must be >= 0");
    if (!(z.imag() > 0.0)) throw DomainError("z must lie in the open upper half-plane");
    Complex w = invert_log_gamma(std::log(z) - Complex(0.0, (k + 1) * M_PI));
    if (!(w.imag() > 0.0)) throw DomainEscape("branch preimage left the upper half-plane");
    return w;
}

}  // namespace specfun
