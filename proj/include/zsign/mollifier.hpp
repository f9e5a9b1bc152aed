#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "zsign/double_word.hpp"

namespace zsign {

/// Coefficients of the mollifier B_X(s) = sum_{nu <= X} beta_nu nu^{-s} and of B_X(s)^2.
/// All sequences are 1-based: element 0 is unused and zero.
struct CoeffTable {
    double X = 0.0;
    double theta = 0.0;  ///< exponent with X = T^theta, NaN when X was given directly
    std::vector<double> alpha;  ///< 1 / sqrt(zeta(s)) = sum alpha_nu nu^{-s}, nu <= floor(X)
    std::vector<double> beta;   ///< alpha_nu (1 - log nu / log X)
    std::vector<double> b;      ///< (beta * beta)(m), m <= floor(X)^2; empty unless requested
    std::vector<DoubleWord> log_nu;

    std::size_t length() const noexcept { return beta.empty() ? 0 : beta.size() - 1; }
};

/// alpha_1..alpha_N, multiplicative with alpha_{p^k} = [x^k] (1 - x)^{1/2}.
std::vector<double> alpha_coeffs(std::size_t N);

/// beta_nu for 1 <= nu <= X. Throws DegenerateLength for X <= 1.
std::vector<double> beta_coeffs(double X);

/// b(m) = sum_{d | m} beta_d beta_{m/d} for 1 <= m <= floor(X)^2.
std::vector<double> b_coeffs(const CoeffTable& table);

CoeffTable make_coeff_table(double X, bool with_b = false);
/// X = T^theta.
CoeffTable make_coeff_table_for(double T, double theta, bool with_b = false);

/// B_X(1/2 + it).
std::complex<double> eval_B(double t, const CoeffTable& table);

/// sum_{nu <= X} |beta_nu| nu^{-1/2}, the trivial bound on |B_X(1/2 + it)|.
double eval_B_bound(const CoeffTable& table);

/// Number of divisors d(m), 1 <= m <= N (element 0 unused).
std::vector<long> divisor_counts(std::size_t N);

}  // namespace zsign
