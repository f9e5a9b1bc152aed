#pragma once

#include <complex>

namespace zsign {

struct ZetaEvaluation {
    std::complex<double> value;
    /// Bound on the Euler-Maclaurin remainder (truncation only, not round-off).
    double remainder_bound = 0.0;
    long direct_terms = 0;
    int correction_terms = 0;
};

/// zeta(sigma + it) by Euler-Maclaurin summation. The reference evaluator: slow
/// (cost ~ |t|) but accurate to ~1e-12 for |t| <= 1e6.
/// Throws PoleProximity within 1e-8 of s = 1, DomainError for |t| > 1e6.
std::complex<double> zeta_em(double sigma, double t);
ZetaEvaluation zeta_em_detailed(double sigma, double t);

/// sum_{n <= cutoff} n^{-1/2 - it}. Approximates zeta(1/2 + it) with error
/// O(cutoff^{-1/2}) only when cutoff <= t <= 2 cutoff; no check is made.
std::complex<double> zeta_truncated(double t, double cutoff);

inline constexpr double kZetaEmMaxHeight = 1e6;
inline constexpr double kPoleGuardRadius = 1e-8;

}  // namespace zsign
