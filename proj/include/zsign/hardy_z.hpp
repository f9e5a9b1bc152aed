#pragma once

#include "zsign/scan_config.hpp"

namespace zsign {

/// A point on the critical line: Z(t) and the continuous phase theta(t).
struct CriticalPoint {
    double t = 0.0;
    double z = 0.0;
    double phase = 0.0;
};

/// Hardy's function Z(t) = exp(i theta(t)) zeta(1/2 + it), real and even.
/// |t| < cfg.em_switch_t: Euler-Maclaurin; otherwise Riemann-Siegel with
/// C_0..C_{cfg.rs_correction_order}. Throws PrecisionExhausted beyond kMaxHeight.
double z_eval(double t, const ScanConfig& cfg);

CriticalPoint critical_point(double t, const ScanConfig& cfg);

/// Above this height the Riemann-Siegel phases are reduced in double-word arithmetic.
inline constexpr double kDoubleWordPhaseHeight = 1e5;
inline constexpr double kMaxHeight = 1e13;

namespace detail {
/// The Riemann-Siegel main sum 2 sum_{n <= N} n^{-1/2} cos(theta(t) - t log n), t > 0.
double rs_main_sum(double t);
/// (-1)^{N-1} (2 pi / t)^{1/4} sum_{k <= order} C_k(p) a^{-k}, a = sqrt(t / 2 pi).
double rs_remainder(double t, int order);
/// C_k evaluated at the fractional part p, k = 0..4.
double rs_coefficient(int k, double p);
}  // namespace detail

}  // namespace zsign
