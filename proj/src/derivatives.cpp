#include "specfun/derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double central_stencil(const RealFn& f, double x, int n, double h) {
    // h^{-n} sum_j (-1)^j C(n,j) f(x + (n/2 - j) h); offsets in half-steps for
    // odd n so all nodes stay symmetric about x.
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
        double offset = (0.5 * n - j) * h;
        double term = binom * f(x + offset);
        acc += (j % 2 == 0) ? term : -term;
        binom = binom * (n - j) / (j + 1);
    }
    return acc / std::pow(h, n);
}

}  // namespace

double derivative_n(const RealFn& f, double x, int n, const DerivChain& chain,
                    const DerivOptions& opts) {
    if (n < 0) throw DomainError("derivative order must be >= 0");
    if (chain) return chain(x, n);
    if (n == 0) return f(x);
    if (n > 8) throw DomainError("numeric derivatives supported up to order 8");

    double h0 = opts.h0;
    if (h0 == 0.0) {
        h0 = 0.1 * std::max(std::abs(x), 0.1);
        if (opts.positive_domain && x > 0) {
            // Keep the whole stencil strictly inside (0, inf).
            h0 = std::min(h0, x / (0.5 * n + 1.5));
        }
    }
    if (h0 <= 1e4 * kEps * std::max(std::abs(x), 1e-3))
        throw StepUnderflow("difference step underflows at this x");

    int levels = std::max(3, opts.ladder);
    // Ridders tableau: rows halve h, columns extrapolate in h^2. Every entry
    // carries an error estimate against its neighbors and the best-attested
    // value wins; once the diagonal difference doubles past that error the
    // deeper rows are rounding noise, so stop there.
    std::vector<std::vector<double>> a(static_cast<size_t>(levels));
    double best = 0.0;
    double best_err = std::numeric_limits<double>::max();
    for (int i = 0; i < levels; ++i) {
        auto& row = a[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(i) + 1);
        row[0] = central_stencil(f, x, n, h0 / std::pow(2.0, i));
        if (i == 0) {
            best = row[0];
            continue;
        }
        const auto& up = a[static_cast<size_t>(i - 1)];
        double fac = 1.0;
        for (int j = 1; j <= i; ++j) {
            fac *= 4.0;
            size_t ju = static_cast<size_t>(j);
            row[ju] = (fac * row[ju - 1] - up[ju - 1]) / (fac - 1.0);
            double err = std::max(std::abs(row[ju] - row[ju - 1]),
                                  std::abs(row[ju] - up[ju - 1]));
            if (err <= best_err) {
                best_err = err;
                best = row[ju];
            }
        }
        if (std::abs(row.back() - up.back()) >= 2.0 * best_err) break;
    }
    return best;
}

LimitResult extrapolate_limit(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 3) throw InsufficientSamples("extrapolation needs at least 3 samples");
    std::vector<std::pair<double, double>> s(samples);
    std::sort(s.begin(), s.end(),
              [](const auto& a, const auto& b) { return std::abs(a.first) > std::abs(b.first); });
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i].first == s[i - 1].first)
            throw InsufficientSamples("extrapolation abscissae must be distinct");
    }
    size_t n = s.size();
    std::vector<double> t(n);
    for (size_t i = 0; i < n; ++i) t[i] = s[i].second;
    double prev = t[n - 1];
    double last_corr = 0.0;
    for (size_t m = 1; m < n; ++m) {
        for (size_t k = n - 1; k >= m; --k) {
            double num = s[k - m].first;
            double den = num / s[k].first - 1.0;
            t[k] = t[k] + (t[k] - t[k - 1]) / den;
            if (k == m) break;
        }
        last_corr = std::abs(t[n - 1] - prev);
        prev = t[n - 1];
    }
    return LimitResult{t[n - 1], last_corr};
}

}  // namespace specfun
