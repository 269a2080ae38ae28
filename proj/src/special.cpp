#include "specfun/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "specfun/quadrature.hpp"
#include "specfun/series.hpp"

namespace specfun {

namespace {

// Shared Bernoulli coefficient cache, built once from the exact series route.
struct BernoulliCache {
    std::vector<double> b;          // B_k as double, k <= 26
    std::vector<double> stirling;   // B_{2k}/((2k)(2k-1)), k = 1..13
    std::vector<double> em;         // B_{2j}/(2j)!, j = 1..13
    BernoulliCache() {
        auto exact = bernoulli_numbers(26);
        b.resize(exact.size());
        for (size_t k = 0; k < exact.size(); ++k) b[k] = exact[k].convert_to<double>();
        stirling.resize(14, 0.0);
        em.resize(14, 0.0);
        for (int k = 1; k <= 13; ++k) {
            Rational s = exact[static_cast<size_t>(2 * k)] / Rational(BigInt(2 * k) * BigInt(2 * k - 1), BigInt(1));
            stirling[static_cast<size_t>(k)] = s.convert_to<double>();
            Rational e = exact[static_cast<size_t>(2 * k)] / Rational(factorial_int(static_cast<unsigned>(2 * k)), BigInt(1));
            em[static_cast<size_t>(k)] = e.convert_to<double>();
        }
    }
};

const BernoulliCache& bern() {
    static const BernoulliCache cache;
    return cache;
}

bool on_cut(const Complex& z) { return z.imag() == 0.0 && z.real() <= 0.0; }

constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

}  // namespace

Complex log_gamma_principal(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma_principal requires finite components");
    if (on_cut(z)) throw CutError("log_gamma_principal undefined on (-inf, 0]");
    Complex shift(0.0, 0.0);
    while (z.real() < 8.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    Complex zi = 1.0 / z;
    Complex zi2 = zi * zi;
    Complex p = zi;
    Complex s = bern().stirling[1] * p;
    for (int k = 2; k <= 12; ++k) {
        p *= zi2;
        s += bern().stirling[static_cast<size_t>(k)] * p;
    }
    return (z - 0.5) * std::log(z) - z + kLogSqrtTwoPi + s + shift;
}

double gamma_real(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma requires finite argument");
    if (x <= 0.0 && x == std::floor(x)) throw PoleError("gamma pole at non-positive integer");
    if (x > 0.0) {
        if (x > 170.0) throw DomainError("gamma overflows double range for x > 170");
        return std::exp(log_gamma_principal(Complex(x, 0.0)).real());
    }
    int n = static_cast<int>(std::floor(-x)) + 1;
    double denom = 1.0;
    double t = x;
    for (int k = 0; k < n; ++k) {
        denom *= t;
        t += 1.0;
    }
    return std::exp(log_gamma_principal(Complex(x + n, 0.0)).real()) / denom;
}

Complex gamma_complex(Complex z) {
    if (z.imag() == 0.0) return Complex(gamma_real(z.real()), 0.0);
    return std::exp(log_gamma_principal(z));
}

Complex polygamma(int m, Complex z) {
    if (m < 0) throw DomainError("polygamma order must be >= 0");
    if (on_cut(z)) throw CutError("polygamma undefined on (-inf, 0]");
    double mfact = 1.0;
    for (int j = 2; j <= m; ++j) mfact *= j;
    double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    Complex shift(0.0, 0.0);
    while (z.real() < 10.0) {
        // psi^(m)(z) = psi^(m)(z+1) - (-1)^m m! z^{-(m+1)}
        shift -= sign_m * mfact * std::pow(z, -(m + 1));
        z += 1.0;
    }
    Complex zi = 1.0 / z;
    Complex zi2 = zi * zi;
    if (m == 0) {
        Complex s = std::log(z) - 0.5 * zi;
        Complex p(1.0, 0.0);
        for (int k = 1; k <= 12; ++k) {
            p *= zi2;
            s -= bern().b[static_cast<size_t>(2 * k)] / (2.0 * k) * p;
        }
        return s + shift;
    }
    double mm1fact = mfact / m;  // (m-1)!
    Complex zim = std::pow(zi, m);
    Complex s = mm1fact * zim + 0.5 * mfact * zim * zi;
    Complex p = zim;
    double ratio = 1.0;  // (2k+m-1)! / (2k)!  accumulated incrementally
    for (int j = 1; j <= m - 1; ++j) ratio *= j;
    for (int k = 1; k <= 12; ++k) {
        p *= zi2;
        ratio *= (2.0 * k + m - 1.0) * (2.0 * k + m - 2.0);
        ratio /= (2.0 * k) * (2.0 * k - 1.0);
        s += bern().b[static_cast<size_t>(2 * k)] * ratio * p;
    }
    double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
    return sign * s + shift;
}

double psi_integral_representation(double x) {
    if (!(x > 0.0)) throw DomainError("psi integral representation requires x > 0");
    auto f = [x](double t) {
        double den = -std::expm1(-t);
        if (den == 0.0) return x - 1.0;
        return (std::expm1(-t) - std::expm1(-x * t)) / den;
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    return -kEulerGamma + integrate(f, 0.0, INFINITY, cfg).value;
}

double hurwitz_zeta(double s, double x) {
    if (s == 1.0) throw PoleError("Hurwitz zeta pole at s = 1");
    if (!(x > 0.0)) throw DomainError("Hurwitz zeta requires x > 0");
    int M = x >= 12.0 ? 0 : static_cast<int>(std::ceil(12.0 - x));
    double sum = 0.0;
    for (int k = M - 1; k >= 0; --k) sum += std::pow(x + k, -s);
    double a = x + M;
    double value = sum + std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
    // Euler-Maclaurin: sum_j B_{2j}/(2j)! (s)_{2j-1} a^{-s-2j+1}
    double poch = s;
    double apow = std::pow(a, -s - 1.0);
    for (int j = 1; j <= 10; ++j) {
        value += bern().em[static_cast<size_t>(j)] * poch * apow;
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        apow /= a * a;
    }
    return value;
}

double lerch_theorem_residual(double x, double h) {
    if (!(x > 0.0)) throw DomainError("requires x > 0");
    if (!(h > 0.0 && h <= 1e-3)) throw DomainError("requires 0 < h <= 1e-3");
    std::vector<std::pair<double, double>> samples;
    for (double hh : {h, 0.5 * h, 0.25 * h}) {
        double d = (hurwitz_zeta(hh, x) - hurwitz_zeta(-hh, x)) / (2.0 * hh);
        samples.push_back({hh * hh, d});
    }
    // Central differences are even in h, so extrapolate in h^2.
    double deriv = 0.0;
    {
        double t0 = samples[0].second, t1 = samples[1].second, t2 = samples[2].second;
        double r1 = t1 + (t1 - t0) / (samples[0].first / samples[1].first - 1.0);
        double r2 = t2 + (t2 - t1) / (samples[1].first / samples[2].first - 1.0);
        deriv = r2 + (r2 - r1) / (samples[0].first / samples[2].first - 1.0);
    }
    double rhs = log_gamma_principal(Complex(x, 0.0)).real() - kLogSqrtTwoPi;
    return std::abs(deriv - rhs);
}

Complex log_barnes_g1p(Complex w, int truncation) {
    if (w.imag() == 0.0 && w.real() <= -1.0)
        throw DomainError("product form needs 1 + w off the poles");
    if (truncation < 10) throw DomainError("product truncation too small");
    const int K = truncation;
    const double absw = std::abs(w);
    // Tail beyond the j <= 6 correction: next term ~ |w|^7/7 zeta(6, K+1).
    double tail_bound = std::pow(absw, 7) / 7.0 * std::pow(static_cast<double>(K), -5.0) / 5.0;
    Complex sum(0.0, 0.0);
    for (int k = 1; k <= K; ++k) {
        Complex r = w / static_cast<double>(k);
        if (std::abs(r) < 0.1) {
            // k log(1+r) - w + w^2/(2k) = k sum_{j>=3} (-1)^{j-1} r^j / j
            Complex rp = r * r * r;
            Complex term(0.0, 0.0);
            double sign = 1.0;
            for (int j = 3; j <= 24; ++j) {
                Complex add = sign * rp / static_cast<double>(j);
                term += add;
                if (std::abs(add) < 1e-20 * (1.0 + std::abs(term))) break;
                rp *= r;
                sign = -sign;
            }
            sum += static_cast<double>(k) * term;
        } else {
            sum += static_cast<double>(k) * std::log(1.0 + r) - w +
                   w * w / (2.0 * static_cast<double>(k));
        }
    }
    Complex value = 0.5 * w * std::log(2.0 * M_PI) - 0.5 * (w + (1.0 + kEulerGamma) * w * w) + sum;
    // sum_{k>K} k log(1+w/k) - w + w^2/(2k) = sum_{j>=3} (-1)^{j-1} w^j/j zeta(j-1, K+1)
    Complex wp = w * w * w;
    for (int j = 3; j <= 6; ++j) {
        double zj = hurwitz_zeta(static_cast<double>(j - 1), static_cast<double>(K + 1));
        double sign = (j % 2 == 0) ? -1.0 : 1.0;
        value += sign * wp / static_cast<double>(j) * zj;
        wp *= w;
    }
    if (tail_bound > 1e-10)
        throw NonConvergence("Barnes G product tail exceeds tolerance", value.real(), tail_bound);
    return value;
}

Complex log_barnes_g1p_fast(Complex w) {
    if (w.imag() == 0.0 && w.real() <= -1.0)
        throw DomainError("log G(1+w) needs 1 + w off the poles");
    Complex shift(0.0, 0.0);
    while (w.real() < 10.0) {
        // G(2+w) = Gamma(1+w) G(1+w)
        shift -= log_gamma_principal(w + 1.0);
        w += 1.0;
    }
    Complex lw = std::log(w);
    Complex w2 = w * w;
    Complex value = 0.5 * w2 * lw - 0.75 * w2 + 0.5 * w * std::log(2.0 * M_PI) - lw / 12.0 +
                    kZetaPrimeMinusOne;
    Complex zi2 = 1.0 / w2;
    Complex p = zi2;
    for (int j = 1; j <= 8; ++j) {
        value += bern().b[static_cast<size_t>(2 * j + 2)] / (4.0 * j * (j + 1.0)) * p;
        p *= zi2;
    }
    return value + shift;
}

Complex barnes_g(Complex z, int truncation) {
    if (z.real() <= -1.0) throw DomainError("barnes_g requires Re z > -1");
    if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    if (z.real() > 0.0 || z.imag() != 0.0) {
        if (z.real() > 0.5)
            return std::exp(log_barnes_g1p(z - 1.0, truncation));
        // One functional-equation step keeps the product argument well-placed.
        return std::exp(log_barnes_g1p(z, truncation)) / gamma_complex(z);
    }
    // Real z in (-1, 0]: G(z) = G(z+1)/Gamma(z), real-valued and negative.
    return Complex(std::exp(log_barnes_g1p(z, truncation).real()) / gamma_real(z.real()), 0.0);
}

double multiple_zeta(int N, double z, double w) {
    if (N < 1) throw DomainError("multiple_zeta requires N >= 1");
    if (!(w > 0.0)) throw DomainError("multiple_zeta requires w > 0");
    if (!(z > static_cast<double>(N)))
        throw DomainError("multiple_zeta defined here only for z > N");
    auto f = [N, z, w](double t) {
        double den = -std::expm1(-t);  // 1 - e^{-t}
        return std::exp(-w * t) * std::pow(t, z - 1.0) * std::pow(den, -static_cast<double>(N));
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    cfg.breakpoints = {0.0};
    double integral = integrate(f, 0.0, INFINITY, cfg).value;
    return integral / std::exp(log_gamma_principal(Complex(z, 0.0)).real());
}

double incomplete_gamma(double lambda, double x) {
    if (!(lambda > 0.0)) throw DomainError("incomplete_gamma requires lambda > 0");
    if (x < 0.0) throw DomainError("incomplete_gamma requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x < lambda + 1.0) {
        // gamma(lambda,x) = x^lambda e^{-x} sum_n x^n / (lambda (lambda+1) ... (lambda+n))
        double term = 1.0 / lambda;
        double sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= x / (lambda + n);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return std::pow(x, lambda) * std::exp(-x) * sum;
    }
    // Upper tail by Lentz continued fraction, then complement.
    double tiny = 1e-300;
    double b = x + 1.0 - lambda;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - lambda);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    double upper = std::exp(-x + lambda * std::log(x)) * h;
    return gamma_real(lambda) - upper;
}

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0)) throw DomainError("incomplete_beta requires a > 0");
    if (x < 0.0 || x > 1.0) throw DomainError("incomplete_beta requires x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) {
        if (!(b > 0.0)) throw DomainError("incomplete_beta diverges at x = 1 for b <= 0");
        return gamma_real(a) * gamma_real(b) / gamma_real(a + b);
    }
    auto f = [a, b](double t) {
        return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0);
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    cfg.breakpoints = {0.0, x};
    return integrate(f, 0.0, x, cfg).value;
}

double lerch_phi(double z, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("lerch_phi requires lambda > 0");
    if (!(std::abs(z) < 1.0)) throw DomainError("lerch_phi requires |z| < 1");
    double sum = 0.0;
    double zp = 1.0;
    const int budget = 2000000;
    for (int n = 0; n < budget; ++n) {
        double term = zp / (n + lambda);
        sum += term;
        double tail = std::abs(zp * z) / ((n + 1 + lambda) * (1.0 - std::abs(z)));
        if (tail < 1e-16 * (1.0 + std::abs(sum))) return sum;
        zp *= z;
    }
    throw NonConvergence("lerch_phi series too slow near |z| = 1", sum,
                         std::abs(zp) / (1.0 - std::abs(z)));
}

double lerch_power_integral(double lambda, double x) {
    if (!(lambda > 0.0)) throw DomainError("requires lambda > 0");
    if (x < 0.0) throw DomainError("requires x >= 0");
    if (x == 0.0) return 0.0;
    auto f = [lambda](double u) { return std::pow(u, lambda - 1.0) / (1.0 + u); };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    cfg.breakpoints = {0.0};
    return integrate(f, 0.0, x, cfg).value;
}

double hyp2f1_special(double nu, double lambda, double x) {
    if (!(nu > 0.0) || !(lambda > 0.0)) throw DomainError("requires nu, lambda > 0");
    if (x < 0.0) throw DomainError("requires x >= 0");
    if (x == 0.0) return 0.0;
    auto f = [nu, lambda](double u) {
        return std::pow(u, lambda - 1.0) * std::pow(1.0 + u, -nu);
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    cfg.breakpoints = {0.0};
    return lambda * integrate(f, 0.0, x, cfg).value;
}

}  // namespace specfun
