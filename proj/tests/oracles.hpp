#pragma once

// Reference data and slow independent routines used only by the tests.
// Nothing here calls into the library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

// 40-digit values computed offline with mpmath.
inline constexpr double kTheta10 = -3.067074396289895291702014;
inline constexpr double kTheta14_5 = -1.578292923981551567;
inline constexpr double kTheta50 = 26.46136607016140964745495;
inline constexpr double kTheta100 = 87.97216523178721962548313;
inline constexpr double kTheta1000 = 2034.546428038031608703345;
inline constexpr double kTheta1e5 = 433752.0272291707814356446;
// theta(1e7) and theta(1e8) split as integer + fraction.
inline constexpr double kTheta1e7Int = 66401092.0, kTheta1e7Frac = 0.53004579190743558;
inline constexpr double kTheta1e8Int = 779140183.0, kTheta1e8Frac = 0.4844519179387728;
inline constexpr double kThetaRoot = 17.84559954041086;

inline constexpr double kZetaHalf = -1.460354508809586812889;
inline constexpr double kZeta3 = 1.202056903159594285399738;

struct ZSample {
    double t;
    double z;
};
inline constexpr ZSample kZSamples[] = {
    {50.0, -0.3407350059550249827533},
    {500.0, 1.472447851055085272664},
    {5000.0, -0.8042572363529398495813},
    {1000.25, 2.0410330006959686075},
    {10000.5, 0.29854015111403722438},
    {100000.125, 7.4046337020739682406},
    {1000000.75, 0.49302746951251644362},
    {10000000.5, -3.9843329230384872103},
    {100000000.25, 17.850732934722086069},
    {100000037.375, -2.7501385825973904787},
};

inline constexpr double kGamma1 = 14.134725141734693790;
inline constexpr double kGamma2 = 21.022039638771554993;

// N(T): number of zeros with 0 < gamma <= T.
struct ZeroCount {
    double T;
    long n;
};
inline constexpr ZeroCount kZeroCounts[] = {{100, 29}, {1000, 649}, {5000, 4520}, {10000, 10142}};

// Riemann-Siegel coefficients C_0..C_4 at p, from derivatives of the closed form.
struct RsCoefficients {
    double p;
    double c[5];
};
inline constexpr RsCoefficients kRsCoefficients[] = {
    {0.3,
     {0.45596596466348189652, 0.0094384217493118759836, 0.0049604353850132403186, 0.00031331609952710177961,
      0.0003137763616446236945}},
    {0.85,
     {0.62629089663090883548, -0.0069296440048953233106, 0.003181633910122384655, -0.000014579461553308845135,
      0.0001042159090379584443}},
};

inline constexpr double kLog12345 = 9.4210064017792798779058775355940915;
// 1e8 log(12345) reduced into [-pi, pi].
inline constexpr double kReduced1e8Log12345 = -1.417761221890341344160992;

// B_X(1/2 + it) for X = 20, at the binary64 values of t.
struct BSample {
    double t;
    double re;
    double im;
};
inline constexpr BSample kB20[] = {
    {10000000.3, 0.55706878063041662756, 0.015081407919065166152},
    {12345.6, 0.94163834635184392235, -0.17023545161412681999},
};

// f(alpha) = integral_0^alpha 1 - (sin pi u / pi u)^2 du.
struct FSample {
    double alpha;
    double f;
};
inline constexpr FSample kF[] = {{0.1, 0.0010880075773905341908},
                                 {0.5, 0.11315249504859190777},
                                 {1.0, 0.5485883332098596866},
                                 {5.0, 4.5101118288461213404},
                                 {20.0, 19.502532709022439322}};
inline constexpr double kAStar = 0.95137055876018109222;
inline constexpr double kGStar = 0.32909960852014904722;
inline constexpr double kG0952 = 0.32909941093097322098;

/// Moebius function mu(1..n) by a sieve over primes.
inline std::vector<int> mobius(std::size_t n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    mu[0] = 0;
    for (std::size_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (std::size_t m = p; m <= n; m += p) {
            if (m > p) composite[m] = true;
            mu[m] = -mu[m];
        }
        for (std::size_t m = p * p; m <= n; m += p * p) mu[m] = 0;
    }
    return mu;
}

/// Solves (alpha * alpha)(n) = mu(n) term by term: 2 alpha_n = mu(n) - sum_{d | n, 1 < d < n} alpha_d alpha_{n/d}.
inline std::vector<double> alpha_by_square_root(std::size_t n) {
    const std::vector<int> mu = mobius(n);
    std::vector<double> inner(n + 1, 0.0);  // sum over 1 < d < m, d | m
    std::vector<double> alpha(n + 1, 0.0);
    alpha[1] = 1.0;
    for (std::size_t m = 2; m <= n; ++m) {
        alpha[m] = 0.5 * (mu[m] - inner[m]);
        // alpha_m now enters inner[m k] for every proper multiple with k <= m.
        for (std::size_t k = 2; k <= m && m * k <= n; ++k) inner[m * k] += (k == m ? 1.0 : 2.0) * alpha[m] * alpha[k];
    }
    return alpha;
}

/// Dirichlet convolution (a * b)(n) for n <= N, both 1-based.
inline std::vector<double> dirichlet_convolve(const std::vector<double>& a, const std::vector<double>& b, std::size_t N) {
    std::vector<double> c(N + 1, 0.0);
    for (std::size_t d = 1; d < a.size() && d <= N; ++d)
        for (std::size_t e = 1; e < b.size() && d * e <= N; ++e) c[d * e] += a[d] * b[e];
    return c;
}

inline long divisor_count(long m) {
    long count = 0;
    for (long d = 1; d * d <= m; ++d)
        if (m % d == 0) count += (d * d == m) ? 1 : 2;
    return count;
}

/// Composite Simpson on [a, b] with n (even) subintervals, compensated summation.
inline double simpson(const std::function<double(double)>& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    double sum = 0.0;
    double carry = 0.0;
    auto add = [&](double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    };
    add(f(a));
    add(f(b));
    for (long i = 1; i < n; ++i) add((i % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i)));
    return sum * h / 3.0;
}

/// 1 - (sin pi u / pi u)^2, written out independently of the library.
inline double sinc_density(double u) {
    if (u == 0.0) return 0.0;
    const double x = M_PI * u;
    const double s = std::sin(x) / x;
    return 1.0 - s * s;
}

}  // namespace oracle
