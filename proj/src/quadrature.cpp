#include "specfun/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
                            0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
                            0.2077849550078985, 0.0};
constexpr double kWgk[8] = {0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
                            0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
                            0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                           0.4179591836734694};

struct PanelEval {
    double value = 0.0;
    double err = 0.0;
};

PanelEval gk15(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fv[15];
    bool finite = true;
    double fc = f(c);
    if (!std::isfinite(fc)) finite = false;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double lo = f(c - x), hi = f(c + x);
        if (!std::isfinite(lo) || !std::isfinite(hi)) finite = false;
        fv[j] = lo;
        fv[7 + j] = hi;
    }
    PanelEval out;
    if (!finite) {
        out.value = 0.0;
        out.err = kInf;
        return out;
    }
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        double sum = fv[j] + fv[7 + j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[7 + j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[7 + j] - reskh));
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    out.value = resk * h;
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    double round = 50.0 * kEps * resabs;
    out.err = std::max(err, round);
    return out;
}

// Tanh-sinh on [a, b]; robust to integrable endpoint singularities. Nodes are
// placed by distance from the endpoint so the map stays accurate near a and b.
struct TsOutcome {
    double value = 0.0;
    double err = kInf;
    bool converged = false;
};

TsOutcome tanh_sinh(const std::function<double(double)>& f, double a, double b, double abs_tol,
                    double rel_tol) {
    const double s = 0.5 * (b - a);
    const double umax = 4.0;
    const int max_level = 11;
    auto node_sum = [&](double h, bool odd_only) {
        double acc = 0.0;
        int k = odd_only ? 1 : 0;
        int step = odd_only ? 2 : 1;
        for (;; k += step) {
            double u = k * h;
            if (u > umax) break;
            double w = 0.5 * M_PI * std::sinh(u);
            double weight = 0.5 * M_PI * std::cosh(u) / std::pow(std::cosh(w), 2);
            if (weight < 1e-320) break;
            double d = 2.0 / (1.0 + std::exp(2.0 * w));  // 1 - tanh(w)
            double dist = s * d;
            if (k == 0) {
                double t = a + s;
                double v = f(t);
                if (std::isfinite(v)) acc += weight * v;
                continue;
            }
            double tp = b - dist;
            double tm = a + dist;
            if (tp != b && dist != 0.0) {
                double v = f(tp);
                if (std::isfinite(v)) acc += weight * v;
            }
            if (tm != a && dist != 0.0) {
                double v = f(tm);
                if (std::isfinite(v)) acc += weight * v;
            }
        }
        return acc;
    };
    double h = 1.0;
    double sum = node_sum(h, false);
    double prev = s * h * sum;
    TsOutcome out;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += node_sum(h, true);
        double cur = s * h * sum;
        double delta = std::abs(cur - prev);
        double tol = std::max(abs_tol, rel_tol * std::abs(cur));
        out.value = cur;
        out.err = delta;
        if (level >= 3 && delta <= tol) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    return out;
}

struct Panel {
    double a, b, value, err;
};

struct PanelLess {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg) {
    std::set<double> declared;
    std::vector<double> cuts{a, b};
    for (double p : cfg.breakpoints) {
        if (p >= a && p <= b) {
            declared.insert(p);
            if (p > a && p < b) cuts.push_back(p);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const size_t npieces = cuts.size() - 1;
    double fixed_val = 0.0, fixed_err = 0.0;
    std::priority_queue<Panel, std::vector<Panel>, PanelLess> queue;
    double queue_val = 0.0, queue_err = 0.0;
    int subdivisions = 0;

    auto push_panel = [&](double p, double q) {
        PanelEval e = gk15(f, p, q);
        queue.push(Panel{p, q, e.value, e.err});
        queue_val += e.value;
        queue_err += e.err;
    };

    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double p = cuts[i], q = cuts[i + 1];
        bool ts = declared.count(p) > 0 || declared.count(q) > 0;
        if (ts) {
            TsOutcome o = tanh_sinh(f, p, q, cfg.abs_tol / static_cast<double>(npieces),
                                    0.1 * cfg.rel_tol);
            if (o.converged) {
                fixed_val += o.value;
                fixed_err += o.err;
                continue;
            }
        }
        push_panel(p, q);
    }

    while (!queue.empty()) {
        double total = fixed_val + queue_val;
        double total_err = fixed_err + queue_err;
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (total_err <= tol) break;
        if (subdivisions >= cfg.max_subdivisions) {
            throw NonConvergence("integration budget exhausted", total, total_err);
        }
        Panel worst = queue.top();
        queue.pop();
        queue_val -= worst.value;
        queue_err -= worst.err;
        double width = worst.b - worst.a;
        double scale = std::abs(worst.a) + std::abs(worst.b) + 1.0;
        if (width <= 30.0 * kEps * scale || !std::isfinite(worst.err)) {
            double mid = 0.5 * (worst.a + worst.b);
            if (width <= 30.0 * kEps * scale || mid <= worst.a || mid >= worst.b) {
                // Cannot split further; freeze this panel at its honest error.
                fixed_val += worst.value;
                fixed_err += std::isfinite(worst.err) ? worst.err : 1.0 + std::abs(worst.value);
                continue;
            }
        }
        double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
        ++subdivisions;
    }

    double total = fixed_val + queue_val;
    double total_err = fixed_err + queue_err;
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (total_err > 2.0 * tol) {
        throw NonConvergence("integration failed to converge", total, total_err);
    }
    return QuadResult{total, total_err, subdivisions};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double lower, double upper,
                     const QuadratureConfig& cfg) {
    if (std::isnan(lower) || std::isnan(upper)) throw DomainError("integration bound is NaN");
    if (lower >= upper) throw DomainError("integration requires lower < upper");

    bool lo_inf = std::isinf(lower);
    bool hi_inf = std::isinf(upper);
    if (!lo_inf && !hi_inf) return integrate_finite(f, lower, upper, cfg);

    if (lo_inf && hi_inf) {
        QuadratureConfig half = cfg;
        half.abs_tol = 0.5 * cfg.abs_tol;
        half.rel_tol = 0.5 * cfg.rel_tol;
        QuadResult pos = integrate(f, 0.0, kInf, half);
        QuadResult neg = integrate([&f](double t) { return f(-t); }, 0.0, kInf, half);
        return QuadResult{pos.value + neg.value, pos.error_estimate + neg.error_estimate,
                          pos.subdivisions + neg.subdivisions};
    }

    if (lo_inf) {
        // (-inf, b]: mirror onto [0, inf).
        double b = upper;
        QuadratureConfig mirrored = cfg;
        mirrored.breakpoints.clear();
        for (double p : cfg.breakpoints)
            if (p < b) mirrored.breakpoints.push_back(b - p);
        return integrate([&f, b](double t) { return f(b - t); }, 0.0, kInf, mirrored);
    }

    // [a, inf): compactify to u in (0, 1].
    double a = lower;
    QuadratureConfig mapped = cfg;
    mapped.breakpoints.clear();
    mapped.breakpoints.push_back(0.0);
    bool lower_declared = false;
    for (double p : cfg.breakpoints) {
        if (p == a) lower_declared = true;
        if (p <= a) continue;
        if (cfg.tail == TailDecay::exponential)
            mapped.breakpoints.push_back(std::exp(a - p));
        else
            mapped.breakpoints.push_back(1.0 / (1.0 + (p - a)));
    }
    if (lower_declared) mapped.breakpoints.push_back(1.0);

    if (cfg.tail == TailDecay::exponential) {
        auto g = [&f, a](double u) { return f(a - std::log(u)) / u; };
        return integrate_finite(g, 0.0, 1.0, mapped);
    }
    auto g = [&f, a](double u) {
        double t = a + (1.0 - u) / u;
        return f(t) / (u * u);
    };
    return integrate_finite(g, 0.0, 1.0, mapped);
}

}  // namespace specfun
