#include "zsign/theta.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace zsign {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogGammaSwitch = 50.0;

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Correction terms beyond (t/2) log(t/2pi) - t/2 - pi/8, as coefficients of t^-(2k-1).
constexpr std::array<double, 5> kThetaSeries = {
    1.0 / 48.0,
    7.0 / 5760.0,
    31.0 / 80640.0,
    127.0 / 430080.0,
    511.0 / 1216512.0,
};

double theta_series_tail(double t) {
    const double inv = 1.0 / t;
    const double inv2 = inv * inv;
    double sum = 0.0;
    for (auto it = kThetaSeries.rbegin(); it != kThetaSeries.rend(); ++it) sum = sum * inv2 + *it;
    return sum * inv;
}

}  // namespace

namespace detail {

double theta_log_gamma(double t) {
    // Shift z = 1/4 + it/2 to Re >= 15, then Stirling. Every log along the way
    // has positive real argument, so the imaginary parts are continuous in t.
    const std::complex<double> z{0.25, 0.5 * t};
    constexpr int kShift = 15;
    double shift_arg = 0.0;
    for (int k = 0; k < kShift; ++k) shift_arg += std::atan2(z.imag(), z.real() + k);

    const std::complex<double> w = z + static_cast<double>(kShift);
    const std::complex<double> inv = 1.0 / w;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> series = 0.0;
    for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
    series *= inv;
    const std::complex<double> log_gamma_w = (w - 0.5) * std::log(w) - w + series;  // + log(2pi)/2, real
    return log_gamma_w.imag() - shift_arg - 0.5 * t * std::log(kPi);
}

double theta_asymptotic(double t) {
    if (t < 0) return -theta_asymptotic(-t);
    return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + theta_series_tail(t);
}

}  // namespace detail

double theta(double t) {
    if (std::fabs(t) < kLogGammaSwitch) return detail::theta_log_gamma(t);
    return detail::theta_asymptotic(t);
}

DoubleWord theta_dw(double t) {
    if (t < 0) return -theta_dw(-t);
    if (t < kLogGammaSwitch) return DoubleWord(detail::theta_log_gamma(t));
    const DoubleWord log_term = dw::log(DoubleWord(t) / dw::kTwoPi);
    return log_term * (0.5 * t) - DoubleWord(0.5 * t) - dw::kPiOver8 + DoubleWord(theta_series_tail(t));
}

double theta_derivative(double t) {
    const double a = std::fabs(t);
    if (a < kLogGammaSwitch) {
        const double h = 1e-5;
        return (detail::theta_log_gamma(t + h) - detail::theta_log_gamma(t - h)) / (2.0 * h);
    }
    const double inv2 = 1.0 / (a * a);
    return 0.5 * std::log(a / (2.0 * kPi)) - inv2 / 48.0 - 7.0 * inv2 * inv2 / 1920.0;
}

std::complex<double> chi_half(double t) {
    const double phase = dw::reduce_two_pi(theta_dw(t) * 2.0);
    return std::polar(1.0, -phase);
}

std::complex<double> chi_half_leading(double t) {
    // (2pi/t)^{it} e^{i(t + pi/4)} = exp(i [t log(2pi/t) + t + pi/4])
    const DoubleWord phase = DoubleWord(t) * dw::log(dw::kTwoPi / DoubleWord(t)) + DoubleWord(t) +
                             DoubleWord(kPi / 4.0);
    return std::polar(1.0, dw::reduce_two_pi(phase));
}

}  // namespace zsign
