#include "zsign/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "zsign/double_word.hpp"
#include "zsign/error.hpp"
#include "zsign/summation.hpp"

namespace zsign {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxCorrections = 120;
constexpr double kRemainderTarget = 1e-16;

// B_{2k} / (2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}; avoids the unstable Bernoulli recurrence.
const std::array<double, kMaxCorrections + 2>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<double, kMaxCorrections + 2> b{};
        for (int k = 1; k < static_cast<int>(b.size()); ++k) {
            double zeta2k;
            if (k == 1) {
                zeta2k = kPi * kPi / 6.0;
            } else if (k == 2) {
                zeta2k = std::pow(kPi, 4) / 90.0;
            } else {
                zeta2k = 1.0;
                for (int n = 2;; ++n) {
                    const double term = std::pow(static_cast<double>(n), -2.0 * k);
                    zeta2k += term;
                    if (term < 1e-19) break;
                }
            }
            const double sign = (k % 2 == 1) ? 1.0 : -1.0;
            b[k] = sign * 2.0 * zeta2k * std::pow(2.0 * kPi, -2.0 * k);
        }
        return b;
    }();
    return table;
}

// n^{-sigma - it} with the phase t log n reduced in double-word precision.
std::complex<double> power(DoubleWord log_n, double sigma, double t) {
    const double magnitude = std::exp(-sigma * log_n.value());
    const double phase = dw::reduce_two_pi(log_n * t);
    return std::polar(magnitude, -phase);
}

}  // namespace

ZetaEvaluation zeta_em_detailed(double sigma, double t) {
    const std::complex<double> s{sigma, t};
    if (std::abs(s - 1.0) < kPoleGuardRadius)
        throw PoleProximity("zeta_em: s is within 1e-8 of the pole at s = 1");
    if (!std::isfinite(sigma) || !std::isfinite(t) || std::fabs(t) > kZetaEmMaxHeight)
        throw DomainError("zeta_em: requires finite sigma and |t| <= 1e6");

    const long n_cut = 10 + static_cast<long>(std::ceil(std::fabs(t) / kPi + std::fabs(sigma)));
    const std::vector<DoubleWord> logs = dw::log_table(static_cast<std::size_t>(n_cut));

    CompensatedComplexSum sum;
    sum.add(1.0);
    for (long n = 2; n < n_cut; ++n) sum.add(power(logs[n], sigma, t));

    const double big_n = static_cast<double>(n_cut);
    const std::complex<double> n_pow = power(logs[n_cut], sigma, t);  // N^{-s}
    sum.add(n_pow * big_n / (s - 1.0));
    sum.add(0.5 * n_pow);

    const auto& bern = bernoulli_over_factorial();
    std::complex<double> pochhammer = s;               // (s)_{2k-1}
    std::complex<double> n_power = n_pow / big_n;      // N^{-s-2k+1}
    const double inv_n2 = 1.0 / (big_n * big_n);
    ZetaEvaluation out;
    out.direct_terms = n_cut - 1;
    int k = 1;
    for (; k <= kMaxCorrections; ++k) {
        sum.add(bern[k] * pochhammer * n_power);
        // Remainder after k terms: |(s)_{2k+2} B_{2k+2} N^{-sigma-2k-1}| / ((2k+2)! (sigma+2k+1)).
        pochhammer *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        n_power *= inv_n2;
        const double bound = std::abs(bern[k + 1] * pochhammer * n_power * (s + (2.0 * k + 1.0))) /
                             (sigma + 2.0 * k + 1.0);
        out.remainder_bound = bound;
        if (bound < kRemainderTarget) break;
    }
    out.correction_terms = std::min(k, kMaxCorrections);
    out.value = sum.value();
    return out;
}

std::complex<double> zeta_em(double sigma, double t) { return zeta_em_detailed(sigma, t).value; }

std::complex<double> zeta_truncated(double t, double cutoff) {
    const auto n_max = static_cast<std::size_t>(std::floor(cutoff));
    if (n_max < 1) return 0.0;
    const std::vector<DoubleWord> logs = dw::log_table(n_max);
    CompensatedComplexSum sum;
    sum.add(1.0);
    for (std::size_t n = 2; n <= n_max; ++n) sum.add(power(logs[n], 0.5, t));
    return sum.value();
}

}  // namespace zsign
