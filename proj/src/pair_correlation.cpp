#include "zsign/pair_correlation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zsign/quadrature.hpp"
#include "zsign/zero_scan.hpp"

namespace zsign {
namespace {

constexpr double kPi = std::numbers::pi;

// Integrates over unit-length pieces so the oscillating tail is resolved evenly.
template <class F>
double integrate_pieces(F&& f, double upper, double tol) {
    const auto pieces = static_cast<int>(std::ceil(upper));
    const double piece_tol = tol / std::max(pieces, 1);
    double sum = 0.0;
    for (int k = 0; k < pieces; ++k) {
        const double lo = k;
        const double hi = std::min(upper, k + 1.0);
        sum += integrate_adaptive(f, lo, hi, piece_tol).value;
    }
    return sum;
}

}  // namespace

double pair_density(double u) {
    const double x = kPi * u;
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        return x2 / 3.0 - 2.0 * x2 * x2 / 45.0;
    }
    const double sinc = std::sin(x) / x;
    return 1.0 - sinc * sinc;
}

double f_alpha(double alpha, double tol) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("f_alpha: alpha must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("f_alpha: tol must be > 0");
    if (alpha == 0.0) return 0.0;
    return integrate_pieces(pair_density, alpha, tol);
}

double objective(double A, double tol) {
    if (!(A >= 0.0)) throw std::invalid_argument("objective: A must be >= 0");
    if (A == 0.0) return 0.0;
    const auto weighted = [A](double u) { return (A - u) * pair_density(u); };
    return 0.5 * A - integrate_pieces(weighted, A, tol);
}

PairCorrResult maximize(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("maximize: tol must be > 0");
    const double inner_tol = 0.1 * tol;
    double lo = 0.0;
    double hi = 2.0;
    if (!(f_alpha(hi, inner_tol) > 0.5)) throw std::runtime_error("maximize: failed to bracket f(A) = 1/2");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f_alpha(mid, inner_tol) < 0.5)
            lo = mid;
        else
            hi = mid;
    }
    PairCorrResult out;
    out.quadrature_tol = tol;
    out.A_star = 0.5 * (lo + hi);
    out.G_star = objective(out.A_star, inner_tol);
    for (int i = 0; i <= 100; ++i) {
        PairCorrSample s;
        s.alpha = 0.02 * i;
        s.f = f_alpha(s.alpha, inner_tol);
        s.half_minus_f = 0.5 - s.f;
        s.G = objective(s.alpha, inner_tol);
        out.f_samples.push_back(s);
    }
    return out;
}

std::vector<BoundPoint> lower_bound_curve(std::span<const double> alpha_grid, double T) {
    if (!(T > 2.0 * kPi * std::numbers::e)) throw std::invalid_argument("lower_bound_curve: requires T > 2 pi e");
    const double count = asymptotic_zero_count(T);
    std::vector<BoundPoint> out;
    out.reserve(alpha_grid.size());
    for (const double alpha : alpha_grid) out.push_back({alpha, std::max(0.0, 0.5 - f_alpha(alpha, 1e-12)) * count});
    return out;
}

}  // namespace zsign
