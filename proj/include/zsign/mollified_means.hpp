#pragma once

#include <vector>

#include "zsign/scan_config.hpp"
#include "zsign/zero_scan.hpp"

namespace zsign {

/// A mean value over (T, 2T] weighted by the mollifier B_X(1/2 + it), X = T^theta.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long nodes = 0;
    bool converged = false;
    double T = 0.0;
    double theta = 0.0;
    double X = 0.0;
    /// False when theta lies outside the range the corresponding asymptotic statement assumes.
    bool within_hypothesis = true;
};

/// integral of Z(t) |B|^2 over [T, 2T]; hypothesis theta < 1/4.
QuadratureResult mean_Z_B2(double T, double theta, const ScanConfig& cfg);
/// integral of |Z(t)| |B|^2 over [T, 2T], panels split at the zeros; hypothesis theta < 1/2.
QuadratureResult mean_absZ_B2(double T, double theta, const ScanConfig& cfg);
/// integral of Z(t)^2 |B|^4 over [T, 2T]; hypothesis theta < 1/100.
QuadratureResult mean_Z2_B4(double T, double theta, const ScanConfig& cfg);

/// Integrals of |Z||B|^2 and of Z|B|^2 restricted to Z > 0, from one zero-split pass.
struct ZeroSplitMeans {
    QuadratureResult absolute;
    QuadratureResult positive;
};
/// zeros must be the zeros of Z on (T, 2T].
ZeroSplitMeans zero_split_means(double T, double theta, const std::vector<ZeroRecord>& zeros,
                                const ScanConfig& cfg);

/// The integral over {Z > 0} of Z|B|^2 against (signed + absolute) / 2.
struct SignSplitReport {
    double T = 0.0;
    double theta = 0.0;
    double X = 0.0;
    QuadratureResult signed_mean;
    QuadratureResult absolute_mean;
    QuadratureResult positive_part;
    double half_sum = 0.0;
    double difference = 0.0;  ///< |positive_part - half_sum|
    double tolerance = 0.0;   ///< sum of the three error estimates
    bool holds = false;
};
SignSplitReport sign_split_check(double T, double theta, const ScanConfig& cfg);

/// integral_{Z > 0} Z|B|^2 <= mu_plus^{1/2} (integral Z^2 |B|^4)^{1/2} on (T, 2T].
struct CauchySchwarzReport {
    double T = 0.0;
    double theta = 0.0;
    double X = 0.0;
    QuadratureResult positive_part;
    double mu_plus = 0.0;
    QuadratureResult fourth_moment;
    double bound = 0.0;
    double slack = 0.0;         ///< bound - positive_part (less both error estimates)
    double slack_factor = 0.0;  ///< bound / positive_part
    bool holds = false;
};
CauchySchwarzReport cauchy_schwarz_check(double T, double theta, const ScanConfig& cfg);

}  // namespace zsign
