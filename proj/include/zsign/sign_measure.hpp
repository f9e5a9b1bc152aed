#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zsign/scan_config.hpp"
#include "zsign/zero_scan.hpp"

namespace zsign {

/// Lebesgue measures of {T < t <= T+H : Z(t) > 0} and its negative counterpart.
struct MeasureReport {
    double T = 0.0;
    double H = 0.0;
    double mu_plus = 0.0;
    double mu_minus = 0.0;
    double ratio_plus = 0.0;  ///< mu_plus / (H / 2)
    long zero_count = 0;
    bool audit_ok = false;
    int grid_refinements = 0;
};

enum class SignAnchor { first_segment, last_segment };

/// Scans (T, T+H], then adds up the positive segments between consecutive zeros.
/// The sign of one end segment, taken at its midpoint, anchors the alternation.
MeasureReport measure_signs(double T, double H, const ScanConfig& cfg);

/// Same, from zeros already located on (T, T+H].
MeasureReport measure_from_zeros(double T, double H, const std::vector<ZeroRecord>& zeros, const ScanConfig& cfg,
                                 SignAnchor anchor = SignAnchor::first_segment);

/// One table row; a failed row keeps its T and H and carries the error in status.
struct TableRow {
    double T = 0.0;
    double H = 0.0;
    std::optional<MeasureReport> report;
    std::string status = "ok";
    double seconds = 0.0;
};

/// Rows with H = T (dyadic intervals (T, 2T]).
std::vector<TableRow> table_dyadic(std::span<const double> T_list, const ScanConfig& cfg);

/// Rows with a fixed interval length H.
std::vector<TableRow> table_fixed(std::span<const double> T_list, double H, const ScanConfig& cfg);

}  // namespace zsign
