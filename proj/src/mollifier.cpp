#include "zsign/mollifier.hpp"

#include <cmath>
#include <limits>

#include "zsign/error.hpp"
#include "zsign/hardy_z.hpp"
#include "zsign/summation.hpp"

namespace zsign {

std::vector<double> alpha_coeffs(std::size_t N) {
    if (N < 1) throw std::invalid_argument("alpha_coeffs: N must be >= 1");
    std::vector<std::size_t> spf(N + 1, 0);
    for (std::size_t i = 2; i <= N; ++i) {
        if (spf[i] != 0) continue;
        for (std::size_t j = i; j <= N; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    // (1 - x)^{1/2} = sum c_k x^k, c_k = c_{k-1} (k - 3/2) / k.
    std::vector<double> prime_power{1.0};
    for (std::size_t k = 1; (std::size_t{1} << k) <= N; ++k)
        prime_power.push_back(prime_power.back() * (static_cast<double>(k) - 1.5) / static_cast<double>(k));

    std::vector<double> alpha(N + 1, 0.0);
    alpha[1] = 1.0;
    for (std::size_t n = 2; n <= N; ++n) {
        const std::size_t p = spf[n];
        std::size_t m = n;
        std::size_t k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        alpha[n] = prime_power[k] * alpha[m];
    }
    return alpha;
}

std::vector<double> beta_coeffs(double X) {
    if (!(X > 1.0)) throw DegenerateLength("mollifier length X must exceed 1");
    const auto n = static_cast<std::size_t>(std::floor(X));
    std::vector<double> beta = alpha_coeffs(n);
    const double log_x = std::log(X);
    for (std::size_t nu = 1; nu <= n; ++nu) beta[nu] *= 1.0 - std::log(static_cast<double>(nu)) / log_x;
    return beta;
}

std::vector<double> b_coeffs(const CoeffTable& table) {
    const std::size_t n = table.length();
    std::vector<double> b(n * n + 1, 0.0);
    for (std::size_t d = 1; d <= n; ++d) {
        if (table.beta[d] == 0.0) continue;
        for (std::size_t e = 1; e <= n; ++e) b[d * e] += table.beta[d] * table.beta[e];
    }
    return b;
}

CoeffTable make_coeff_table(double X, bool with_b) {
    CoeffTable table;
    table.X = X;
    table.theta = std::numeric_limits<double>::quiet_NaN();
    table.beta = beta_coeffs(X);
    table.alpha = alpha_coeffs(table.length());
    table.log_nu = dw::log_table(table.length());
    if (with_b) table.b = b_coeffs(table);
    return table;
}

CoeffTable make_coeff_table_for(double T, double theta, bool with_b) {
    CoeffTable table = make_coeff_table(std::pow(T, theta), with_b);
    table.theta = theta;
    return table;
}

std::complex<double> eval_B(double t, const CoeffTable& table) {
    CompensatedComplexSum sum;
    sum.add(table.beta.at(1));
    const bool wide = std::fabs(t) >= kDoubleWordPhaseHeight;
    for (std::size_t nu = 2; nu < table.beta.size(); ++nu) {
        const double beta = table.beta[nu];
        if (beta == 0.0) continue;
        const DoubleWord log_nu = table.log_nu[nu];
        const double phase = wide ? dw::reduce_two_pi(log_nu * t) : t * log_nu.hi;
        const double amplitude = beta / std::sqrt(static_cast<double>(nu));
        sum.add(std::polar(amplitude, -phase));
    }
    return sum.value();
}

double eval_B_bound(const CoeffTable& table) {
    double sum = 0.0;
    for (std::size_t nu = 1; nu < table.beta.size(); ++nu)
        sum += std::fabs(table.beta[nu]) / std::sqrt(static_cast<double>(nu));
    return sum;
}

std::vector<long> divisor_counts(std::size_t N) {
    std::vector<long> d(N + 1, 0);
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i; j <= N; j += i) ++d[j];
    return d;
}

}  // namespace zsign
