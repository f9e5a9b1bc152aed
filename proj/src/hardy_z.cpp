#include "zsign/hardy_z.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "zsign/double_word.hpp"
#include "zsign/error.hpp"
#include "zsign/summation.hpp"
#include "zsign/theta.hpp"
#include "zsign/zeta.hpp"

namespace zsign {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kTaylorTerms = 72;
constexpr std::size_t kLogTableSize = 1 << 14;

using Poly = std::vector<double>;

// Taylor coefficients of Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) about p = 1/2.
// With z = p - 1/2, Psi = -cos(2 pi z^2 - 5 pi / 8) / cos(2 pi z), an entire function;
// the coefficients come from a trapezoidal Cauchy integral on |z| = 1.
Poly psi_taylor() {
    constexpr int kNodes = 256;
    Poly c(kTaylorTerms, 0.0);
    for (int j = 0; j < kNodes; ++j) {
        const double phi = 2.0 * kPi * j / kNodes;
        const std::complex<double> z = std::polar(1.0, phi);
        const std::complex<double> psi =
            -std::cos(2.0 * kPi * z * z - 5.0 * kPi / 8.0) / std::cos(2.0 * kPi * z);
        for (std::size_t n = 0; n < kTaylorTerms; ++n)
            c[n] += (psi * std::polar(1.0, -phi * static_cast<double>(n))).real() / kNodes;
    }
    return c;
}

Poly derivative(const Poly& c, int order) {
    Poly d(c.size() - order, 0.0);
    for (std::size_t m = 0; m < d.size(); ++m) {
        double factor = 1.0;
        for (int i = 1; i <= order; ++i) factor *= static_cast<double>(m + i);
        d[m] = c[m + order] * factor;
    }
    return d;
}

void accumulate(Poly& target, const Poly& src, double scale) {
    for (std::size_t i = 0; i < src.size(); ++i) target[i] += scale * src[i];
}

// Gabcke's C_0..C_4 as polynomials in z = p - 1/2.
std::array<Poly, kMaxCorrectionOrder + 1> build_coefficients() {
    const Poly psi = psi_taylor();
    std::array<Poly, 13> d;
    for (int k = 0; k <= 12; ++k) d[k] = derivative(psi, k);
    const double pi2 = kPi * kPi;
    const double pi4 = pi2 * pi2;
    const double pi6 = pi4 * pi2;
    const double pi8 = pi4 * pi4;

    std::array<Poly, kMaxCorrectionOrder + 1> out;
    for (auto& p : out) p.assign(kTaylorTerms, 0.0);
    accumulate(out[0], d[0], 1.0);
    accumulate(out[1], d[3], -1.0 / (96.0 * pi2));
    accumulate(out[2], d[2], 1.0 / (64.0 * pi2));
    accumulate(out[2], d[6], 1.0 / (18432.0 * pi4));
    accumulate(out[3], d[1], -1.0 / (64.0 * pi2));
    accumulate(out[3], d[5], -1.0 / (3840.0 * pi4));
    accumulate(out[3], d[9], -1.0 / (5308416.0 * pi6));
    accumulate(out[4], d[0], 1.0 / (128.0 * pi2));
    accumulate(out[4], d[4], 19.0 / (24576.0 * pi4));
    accumulate(out[4], d[8], 11.0 / (5898240.0 * pi6));
    accumulate(out[4], d[12], 1.0 / (2038431744.0 * pi8));
    return out;
}

const std::array<Poly, kMaxCorrectionOrder + 1>& coefficients() {
    static const auto table = build_coefficients();
    return table;
}

struct TermTables {
    std::vector<DoubleWord> log_dw;
    std::vector<double> log_d;
    std::vector<double> inv_sqrt;
};

const TermTables& term_tables() {
    static const TermTables tables = [] {
        TermTables tt;
        tt.log_dw = dw::log_table(kLogTableSize);
        tt.log_d.resize(tt.log_dw.size());
        tt.inv_sqrt.resize(tt.log_dw.size());
        for (std::size_t n = 1; n < tt.log_dw.size(); ++n) {
            tt.log_d[n] = tt.log_dw[n].value();
            tt.inv_sqrt[n] = 1.0 / std::sqrt(static_cast<double>(n));
        }
        return tt;
    }();
    return tables;
}

double evaluate_z_em(double t) {
    const std::complex<double> zeta = zeta_em(0.5, t);
    const double phase = dw::reduce_two_pi(theta_dw(t));
    return (std::polar(1.0, phase) * zeta).real();
}

}  // namespace

namespace detail {

double rs_coefficient(int k, double p) {
    const Poly& c = coefficients().at(static_cast<std::size_t>(k));
    const double z = p - 0.5;
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double rs_main_sum(double t) {
    const double a = std::sqrt(t / (2.0 * kPi));
    const auto n_max = static_cast<std::size_t>(a);
    const TermTables& tt = term_tables();
    CompensatedSum sum;
    if (t < kDoubleWordPhaseHeight) {
        const double th = theta(t);
        for (std::size_t n = 1; n <= n_max; ++n)
            sum.add(tt.inv_sqrt[n] * std::cos(th - t * tt.log_d[n]));
    } else {
        const DoubleWord th = theta_dw(t);
        for (std::size_t n = 1; n <= n_max; ++n) {
            const DoubleWord log_n = n < tt.log_dw.size() ? tt.log_dw[n] : dw::log(static_cast<double>(n));
            const double inv_sqrt = n < tt.inv_sqrt.size() ? tt.inv_sqrt[n] : 1.0 / std::sqrt(static_cast<double>(n));
            sum.add(inv_sqrt * std::cos(dw::reduce_two_pi(th - log_n * t)));
        }
    }
    return 2.0 * sum.value();
}

double rs_remainder(double t, int order) {
    const double a = std::sqrt(t / (2.0 * kPi));
    const double n_floor = std::floor(a);
    const double p = a - n_floor;
    const double inv_a = 1.0 / a;
    double series = 0.0;
    double scale = 1.0;
    for (int k = 0; k <= order; ++k) {
        series += rs_coefficient(k, p) * scale;
        scale *= inv_a;
    }
    const double sign = std::fmod(n_floor, 2.0) == 1.0 ? 1.0 : -1.0;  // (-1)^{N-1}
    return sign * std::pow(2.0 * kPi / t, 0.25) * series;
}

}  // namespace detail

double z_eval(double t, const ScanConfig& cfg) {
    cfg.validate();
    const double a = std::fabs(t);
    if (!std::isfinite(a) || a > kMaxHeight)
        throw PrecisionExhausted("z_eval: phase accuracy cannot be guaranteed at t = " + std::to_string(t));
    if (a < cfg.em_switch_t) return evaluate_z_em(a);
    return detail::rs_main_sum(a) + detail::rs_remainder(a, cfg.rs_correction_order);
}

CriticalPoint critical_point(double t, const ScanConfig& cfg) {
    return {t, z_eval(t, cfg), theta(t)};
}

}  // namespace zsign
