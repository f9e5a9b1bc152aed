#pragma once

namespace zsign {

/// Precision knobs shared by the evaluator, the zero scanner and the quadratures.
struct ScanConfig {
    /// Highest Riemann-Siegel correction term C_k used, 1..4.
    int rs_correction_order = 4;
    /// Below this height Z is evaluated from the Euler-Maclaurin oracle.
    double em_switch_t = 500.0;
    /// Target bracket width for zero localization.
    double bisection_tol = 1e-9;
    /// Grid points per mean zero gap 2 pi / log(t / 2 pi).
    double samples_per_mean_gap = 4.0;

    /// Throws UsageError naming the offending field.
    void validate() const;

    friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

inline constexpr int kMaxCorrectionOrder = 4;

}  // namespace zsign
