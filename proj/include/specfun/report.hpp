#pragma once

#include <complex>
#include <optional>
#include <string>

#include "specfun/grid.hpp"

namespace specfun {

enum class ClassLabel { CM, CMAlpha, LCM, Stieltjes, Bernstein, Thorin, Pick, HornBernstein, Positive };

enum class Verdict { verified_at_samples, refuted, inconclusive };

// Counterexample location: sample point (complex for half-plane scans),
// derivative order involved, and the offending value.
struct Witness {
    std::complex<double> point{0.0, 0.0};
    int order = 0;
    double value = 0.0;
};

struct ClassReport {
    ClassLabel class_label = ClassLabel::CM;
    Verdict verdict = Verdict::inconclusive;
    std::optional<Witness> witness;
    Grid grid;
    int orders_checked = 0;
    double tol = 0.0;
    // Order/index parameters where the label needs them (alpha for CM(alpha),
    // lambda for S_lambda and B_lambda, both for Thorin).
    double alpha = 0.0;
    double lambda = 0.0;

    bool verified() const { return verdict == Verdict::verified_at_samples; }
    bool refuted() const { return verdict == Verdict::refuted; }
};

inline std::string to_string(ClassLabel c) {
    switch (c) {
        case ClassLabel::CM: return "CM";
        case ClassLabel::CMAlpha: return "CM(alpha)";
        case ClassLabel::LCM: return "LCM";
        case ClassLabel::Stieltjes: return "S_lambda";
        case ClassLabel::Bernstein: return "B_lambda";
        case ClassLabel::Thorin: return "T_lambda_alpha";
        case ClassLabel::Pick: return "Pick";
        case ClassLabel::HornBernstein: return "HornBernstein";
        case ClassLabel::Positive: return "positive";
    }
    return "?";
}

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified_at_samples: return "verified-at-samples";
        case Verdict::refuted: return "refuted";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace specfun
