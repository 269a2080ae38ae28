#include "specfun/measures.hpp"

#include <algorithm>
#include <cmath>

namespace specfun {

namespace {

std::vector<double> probe_points(const DensityPiece& p, int n) {
    std::vector<double> pts;
    pts.reserve(static_cast<size_t>(n));
    bool lo_inf = std::isinf(p.lower);
    bool hi_inf = std::isinf(p.upper);
    if (!lo_inf && !hi_inf) {
        for (int i = 0; i < n; ++i) {
            pts.push_back(p.lower + (p.upper - p.lower) * (i + 0.5) / n);
        }
    } else if (!lo_inf) {
        double s = std::max(1.0, std::abs(p.lower));
        for (int i = 0; i < n; ++i) pts.push_back(p.lower + s * std::pow(2.0, i - n / 2));
    } else if (!hi_inf) {
        double s = std::max(1.0, std::abs(p.upper));
        for (int i = 0; i < n; ++i) pts.push_back(p.upper - s * std::pow(2.0, i - n / 2));
    } else {
        for (int i = 0; i < n; ++i) {
            double g = std::pow(2.0, i / 2 - n / 4);
            pts.push_back((i % 2 == 0) ? g : -g);
        }
    }
    return pts;
}

}  // namespace

void MeasureSpec::validate(int samples_per_piece) const {
    for (const PointMass& m : point_masses) {
        if (!(m.weight >= 0.0)) throw DomainError("point mass weight must be >= 0");
        if (!std::isfinite(m.location)) throw DomainError("point mass location must be finite");
    }
    for (const DensityPiece& p : density_pieces) {
        if (!(p.lower < p.upper)) throw DomainError("density interval is empty");
        if (!p.density) throw DomainError("density piece has no density function");
        for (double t : probe_points(p, samples_per_piece)) {
            double v = p.density(t);
            if (!std::isfinite(v)) throw EvaluationError("density evaluated non-finite");
            if (v < -1e-12 * (1.0 + std::abs(v))) throw NonPositive("density sampled negative");
        }
    }
    std::vector<std::pair<double, double>> spans;
    spans.reserve(density_pieces.size());
    for (const DensityPiece& p : density_pieces) spans.emplace_back(p.lower, p.upper);
    std::sort(spans.begin(), spans.end());
    for (size_t i = 1; i < spans.size(); ++i) {
        double gap = spans[i].first - spans[i - 1].second;
        if (gap < -1e-12 * std::max(1.0, std::abs(spans[i].first)))
            throw DomainError("density intervals overlap");
    }
}

double MeasureSpec::integrate_against(const std::function<double(double)>& kernel,
                                      const QuadratureConfig& cfg) const {
    double acc = 0.0;
    for (const PointMass& m : point_masses) acc += m.weight * kernel(m.location);
    for (const DensityPiece& p : density_pieces) {
        QuadratureConfig piece_cfg = cfg;
        if (p.singular_lower && std::isfinite(p.lower)) piece_cfg.breakpoints.push_back(p.lower);
        if (p.singular_upper && std::isfinite(p.upper)) piece_cfg.breakpoints.push_back(p.upper);
        const auto& density = p.density;
        acc += integrate([&kernel, &density](double t) { return kernel(t) * density(t); },
                         p.lower, p.upper, piece_cfg)
                   .value;
    }
    return acc;
}

}  // namespace specfun
