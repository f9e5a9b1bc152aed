#pragma once

#include <complex>

#include "zsign/double_word.hpp"

namespace zsign {

/// Riemann-Siegel phase: the continuous real function with chi(1/2 + it) = exp(-2i theta(t)).
/// Odd in t, theta(0) = 0. Exact log-gamma route below |t| = 50, asymptotic series above.
double theta(double t);

/// Same phase carried in double-word precision. Needed once t*log(t) exceeds ~1e6,
/// where the double result has lost the digits that matter modulo 2*pi.
DoubleWord theta_dw(double t);

/// d theta / dt.
double theta_derivative(double t);

/// chi(1/2 + it) = exp(-2i theta(t)); unimodular.
std::complex<double> chi_half(double t);

/// Leading term of the large-t asymptotic chi(s) ~ (2 pi / t)^(s - 1/2) e^{i(t + pi/4)} at s = 1/2 + it.
std::complex<double> chi_half_leading(double t);

namespace detail {
/// Im log Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
double theta_log_gamma(double t);
/// The asymptotic expansion, valid for |t| >= 10.
double theta_asymptotic(double t);
}  // namespace detail

}  // namespace zsign
