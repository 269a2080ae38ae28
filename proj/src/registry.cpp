#include "specfun/registry.hpp"

#include <cmath>

#include "specfun/asymptotics.hpp"
#include "specfun/errors.hpp"
#include "specfun/monotone.hpp"
#include "specfun/special.hpp"

namespace specfun {

namespace {

double sign_pm(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

double falling(double p, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= p - static_cast<double>(i);
    return r;
}

double binet_direct(double x) {
    return log_gamma_principal(Complex(x, 0.0)).real() - (x - 0.5) * std::log(x) + x -
           kLogSqrtTwoPi;
}

// log Gamma(x) + log Gamma(x+a+b) - log Gamma(x+a) - log Gamma(x+b) and its
// polygamma derivative ladder, for shifts (a, b) = (0.5, 2).
double gamma_log_combo(double x, int n) {
    const double shifts[4] = {0.0, 2.5, 0.5, 2.0};
    const double signs[4] = {1.0, 1.0, -1.0, -1.0};
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        double z = x + shifts[i];
        acc += signs[i] * (n == 0 ? log_gamma_principal(Complex(z, 0.0)).real()
                                  : polygamma(n - 1, Complex(z, 0.0)).real());
    }
    return acc;
}

std::vector<BuiltinFunction> make_registry() {
    std::vector<BuiltinFunction> reg;

    reg.push_back({"exp_neg", "exp(-x)",
                   [](double x) { return std::exp(-x); },
                   [](double x, int n) { return sign_pm(n) * std::exp(-x); }, true});

    reg.push_back({"identity", "x",
                   [](double x) { return x; },
                   [](double x, int n) { return n == 0 ? x : (n == 1 ? 1.0 : 0.0); }, true});

    reg.push_back({"inv_x", "1/x",
                   [](double x) { return 1.0 / x; },
                   [](double x, int n) {
                       double r = std::pow(x, -1.0 - n);
                       for (int i = 1; i <= n; ++i) r *= -static_cast<double>(i);
                       return r;
                   },
                   true});

    reg.push_back({"inv_one_plus_x", "1/(1+x)",
                   [](double x) { return 1.0 / (1.0 + x); },
                   [](double x, int n) {
                       double r = std::pow(1.0 + x, -1.0 - n);
                       for (int i = 1; i <= n; ++i) r *= -static_cast<double>(i);
                       return r;
                   },
                   true});

    reg.push_back({"log_one_plus_inv", "log(1 + 1/x)",
                   [](double x) { return std::log1p(1.0 / x); },
                   [](double x, int n) {
                       if (n == 0) return std::log1p(1.0 / x);
                       double fact = 1.0;
                       for (int i = 1; i < n; ++i) fact *= static_cast<double>(i);
                       return sign_pm(n - 1) * fact *
                              (std::pow(1.0 + x, -n) - std::pow(x, -n));
                   },
                   true});

    reg.push_back({"sqrt_inv", "x^(-1/2)",
                   [](double x) { return 1.0 / std::sqrt(x); },
                   [](double x, int n) { return falling(-0.5, n) * std::pow(x, -0.5 - n); },
                   true});

    reg.push_back({"one_minus_exp", "1 - exp(-x)",
                   [](double x) { return -std::expm1(-x); },
                   [](double x, int n) {
                       return n == 0 ? -std::expm1(-x) : -sign_pm(n) * std::exp(-x);
                   },
                   true});

    reg.push_back({"gaussian", "exp(-x^2)",
                   [](double x) { return std::exp(-x * x); },
                   [](double x, int n) {
                       // Hermite ladder H_{k+1} = 2x H_k - 2k H_{k-1}.
                       double hm = 0.0, h = 1.0;
                       for (int k = 0; k < n; ++k) {
                           double next = 2.0 * x * h - 2.0 * static_cast<double>(k) * hm;
                           hm = h;
                           h = next;
                       }
                       return sign_pm(n) * h * std::exp(-x * x);
                   },
                   true});

    reg.push_back({"incomplete_gamma_two", "lower incomplete gamma(2, x)",
                   [](double x) { return incomplete_gamma(2.0, x); },
                   [](double x, int n) {
                       if (n == 0) return incomplete_gamma(2.0, x);
                       return sign_pm(n - 1) * (x - static_cast<double>(n - 1)) * std::exp(-x);
                   },
                   true});

    reg.push_back({"kristiansen_half_two",
                   "log Gamma(x)Gamma(x+2.5)/(Gamma(x+0.5)Gamma(x+2))",
                   [](double x) { return gamma_log_combo(x, 0); },
                   [](double x, int n) { return gamma_log_combo(x, n); }, true});

    reg.push_back({"binet", "log Gamma(x) - (x - 1/2) log x + x - log sqrt(2 pi)",
                   [](double x) { return binet_direct(x); },
                   [](double x, int n) {
                       if (n == 0) return binet_direct(x);
                       return sign_pm(n) * remainder_RNm_weighted(1, 1, x, n);
                   },
                   true});

    reg.push_back({"log_gamma_ratio", "log Gamma(x+1) / (x log x)",
                   [](double x) {
                       if (!(x > 0.0)) throw DomainError("x must be positive");
                       if (std::abs(x - 1.0) <= 1e-3)
                           throw DomainError(
                               "x near 1 excluded (removable singularity of x log x)");
                       return log_gamma_principal(Complex(x + 1.0, 0.0)).real() /
                              (x * std::log(x));
                   },
                   nullptr, false});

    return reg;
}

}  // namespace

const std::vector<BuiltinFunction>& builtin_registry() {
    static const std::vector<BuiltinFunction> reg = make_registry();
    return reg;
}

const BuiltinFunction& find_builtin(const std::string& id) {
    for (const auto& fn : builtin_registry())
        if (fn.id == id) return fn;
    throw UsageError("unknown function id '" + id + "'");
}

std::vector<InclusionViolation> class_inclusion_violations(const Grid& grid, double tol) {
    std::vector<InclusionViolation> out;
    for (const auto& fn : builtin_registry()) {
        if (!fn.inclusion_suite) continue;
        ClassReport cm = check_cm(fn.f, fn.chain, 0.0, grid, 6, tol);
        bool lcm_ok = false;
        bool lcm_applicable = true;
        try {
            lcm_ok = check_lcm(fn.f, fn.chain, grid, 5, tol).verified();
        } catch (const NonPositive&) {
            lcm_applicable = false;
        }
        ClassReport s1 = check_stieltjes_order(fn.f, fn.chain, 1.0, 2, grid, tol);
        ClassReport s2 = check_stieltjes_order(fn.f, fn.chain, 2.0, 2, grid, tol);
        ClassReport b1 = check_bernstein_order(fn.f, fn.chain, 1.0, grid, 5, tol);
        ClassReport b2 = check_bernstein_order(fn.f, fn.chain, 2.0, grid, 5, tol);
        auto flag = [&](const char* relation) {
            out.push_back({fn.id, relation});
        };
        if (s1.verified() && !cm.verified()) flag("S_1 subset of CM");
        if (s2.verified() && !cm.verified()) flag("S_2 subset of CM");
        if (lcm_applicable && lcm_ok && !cm.verified()) flag("LCM subset of CM");
        if (b1.verified() && !b2.verified()) flag("B_1 subset of B_2");
        if (s1.verified() && !s2.verified()) flag("S_1 subset of S_2");
    }
    return out;
}

}  // namespace specfun
