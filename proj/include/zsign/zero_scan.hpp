#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zsign/scan_config.hpp"

namespace zsign {

enum class DerivativeSign : int { minus = -1, unknown = 0, plus = 1 };

char to_char(DerivativeSign s) noexcept;

/// A located zero of Z. derivative_sign is the sign of Z just above gamma.
struct ZeroRecord {
    double gamma = 0.0;
    double bracket_width = 0.0;
    DerivativeSign derivative_sign = DerivativeSign::unknown;
    std::size_t index_in_scan = 0;
};

struct ScanResult {
    std::vector<ZeroRecord> zeros;  ///< zeros in the requested (t0, t1]
    /// Largest grid-doubling level any audit block needed.
    int refinements = 0;
    /// Audit window, widened to good Gram points, and the zero count it must hold.
    double window_lo = 0.0;
    double window_hi = 0.0;
    long window_expected = 0;
    long window_found = 0;
};

/// theta(t)/pi + 1, the smooth part of N(t).
double smooth_zero_count(double t);

/// (T / 2 pi) log(T / 2 pi), the leading asymptotic of N(T).
double asymptotic_zero_count(double T);

/// N(t) under |S(t)| < 1: the integer nearest theta(t)/pi + 1 whose parity matches
/// the sign of Z(t) (N(t) is odd where Z(t) > 0). Exact at good Gram points whenever |S| < 2.
long zero_count_estimate(double t, const ScanConfig& cfg = {});

/// Expected number of zeros on (t0, t1]: zero_count_estimate(t1) - zero_count_estimate(t0).
long count_audit(double t0, double t1, const ScanConfig& cfg = {});

/// The Gram point g_j with theta(g_j) = j pi, j >= 0.
double gram_point(long j);

/// Locates all zeros on (t0, t1], sorted ascending, derivative signs not yet set.
/// The scan is audited block by block between good Gram points; a block whose sign
/// changes disagree with its Gram count is re-sampled at doubled density up to four
/// times, then AuditFailure is thrown with that block as the suspect interval.
std::vector<ZeroRecord> find_zeros(double t0, double t1, const ScanConfig& cfg);
ScanResult scan_zeros(double t0, double t1, const ScanConfig& cfg);

/// Sets derivative_sign from sign Z(gamma + eps), eps = max(bracket_width, 1e-7), and
/// checks that consecutive signs alternate (AlternationViolation otherwise).
std::vector<ZeroRecord> classify(std::vector<ZeroRecord> zeros, const ScanConfig& cfg);

/// Gap statistics. Each gap is unfolded by the local mean density,
/// u = (gamma* - gamma) log(gamma / 2 pi) / 2 pi, so the mean gap is ~1.
struct GapStats {
    std::vector<double> normalized_gaps;
    double bin_width = 0.0;
    double upper = 0.0;  ///< B
    std::vector<long> histogram;
    long overflow = 0;   ///< gaps beyond B; histogram sum + overflow = gap count
    /// gap count x integral of 1 - (sin pi u / pi u)^2 over each bin (nearest-neighbour heuristic).
    std::vector<double> predicted;
    /// All ordered pairs gamma < gamma' with unfolded difference in (0, B]; diagonal excluded.
    std::vector<long> pair_histogram;
    /// zero count x the same per-bin density integral.
    std::vector<double> pair_predicted;
};

GapStats gap_stats(const std::vector<ZeroRecord>& zeros, int bins, double B);

/// (N_+(alpha, T), N_-(alpha, T)): classified zeros gamma <= T whose next zero gamma*
/// satisfies gamma* - gamma > 2 pi alpha / log T. The last zero has no successor and is skipped.
std::pair<long, long> n_pm_alpha(const std::vector<ZeroRecord>& zeros, double T, double alpha);

}  // namespace zsign
