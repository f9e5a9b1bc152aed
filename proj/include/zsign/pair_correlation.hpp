#pragma once

#include <span>
#include <vector>

namespace zsign {

/// 1 - (sin pi u / pi u)^2, the pair-correlation density of normalized zero spacings.
double pair_density(double u);

/// f(alpha) = integral_0^alpha pair_density(u) du, to absolute error tol.
double f_alpha(double alpha, double tol = 1e-12);

/// G(A) = integral_0^A (1/2 - f(alpha)) d alpha, evaluated as
/// A/2 - integral_0^A (A - u) pair_density(u) du.
double objective(double A, double tol = 1e-12);

struct PairCorrSample {
    double alpha = 0.0;
    double f = 0.0;
    double half_minus_f = 0.0;
    double G = 0.0;
};

struct PairCorrResult {
    double A_star = 0.0;  ///< root of f(A) = 1/2, the maximizer of G
    double G_star = 0.0;
    std::vector<PairCorrSample> f_samples;
    double quadrature_tol = 0.0;
};

/// Maximizes G through its first-order condition G'(A) = 1/2 - f(A) = 0,
/// bracketed on [0, 2] and bisected.
PairCorrResult maximize(double tol);

struct BoundPoint {
    double alpha = 0.0;
    double bound = 0.0;
};

/// (alpha, max(0, 1/2 - f(alpha)) * count) per grid point, with count the
/// asymptotic (T / 2 pi) log(T / 2 pi). Requires T > 2 pi e.
std::vector<BoundPoint> lower_bound_curve(std::span<const double> alpha_grid, double T);

}  // namespace zsign
