#include "zsign/double_word.hpp"

#include <cmath>

namespace zsign {
namespace {

inline DoubleWord two_sum(double a, double b) noexcept {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleWord quick_two_sum(double a, double b) noexcept {
    const double s = a + b;
    return {s, b - (s - a)};
}

// Dekker's splitting; avoids depending on a hardware fma.
inline void split(double a, double& hi, double& lo) noexcept {
    constexpr double kSplitter = 134217729.0;  // 2^27 + 1
    const double t = kSplitter * a;
    hi = t - (t - a);
    lo = a - hi;
}

inline DoubleWord two_prod(double a, double b) noexcept {
    const double p = a * b;
    double ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    const double err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    return {p, err};
}

}  // namespace

DoubleWord operator+(DoubleWord a, DoubleWord b) noexcept {
    DoubleWord s = two_sum(a.hi, b.hi);
    const DoubleWord t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

DoubleWord operator-(DoubleWord a) noexcept { return {-a.hi, -a.lo}; }

DoubleWord operator-(DoubleWord a, DoubleWord b) noexcept { return a + (-b); }

DoubleWord operator*(DoubleWord a, DoubleWord b) noexcept {
    DoubleWord p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

DoubleWord operator*(DoubleWord a, double b) noexcept {
    DoubleWord p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

DoubleWord operator/(DoubleWord a, DoubleWord b) noexcept {
    const double q1 = a.hi / b.hi;
    DoubleWord r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    return quick_two_sum(q1, q2) + DoubleWord(q3);
}

DoubleWord operator/(DoubleWord a, double b) noexcept { return a / DoubleWord(b); }

namespace dw {
namespace {

// 2*atanh(u) = 2(u + u^3/3 + u^5/5 + ...), |u| <= 0.18.
DoubleWord two_atanh(DoubleWord u) {
    const DoubleWord u2 = u * u;
    DoubleWord power = u;
    DoubleWord sum = u;
    for (int k = 3; k < 200; k += 2) {
        power = power * u2;
        const DoubleWord term = power / static_cast<double>(k);
        sum = sum + term;
        if (std::fabs(term.hi) <= 1e-34 * std::fabs(sum.hi)) break;
    }
    return sum * 2.0;
}

}  // namespace

DoubleWord log(DoubleWord x) {
    int exponent = 0;
    const double mant = std::frexp(x.hi, &exponent);
    DoubleWord m{mant, std::ldexp(x.lo, -exponent)};
    if (mant < 0.70710678118654752) {
        m = m * 2.0;
        --exponent;
    }
    const DoubleWord u = (m - 1.0) / (m + 1.0);
    return kLn2 * static_cast<double>(exponent) + two_atanh(u);
}

double reduce_two_pi(DoubleWord x) noexcept {
    const double k = std::nearbyint(x.hi / kTwoPi.hi);
    const DoubleWord r = x - kTwoPi * k;
    return r.hi + r.lo;
}

double round(DoubleWord x) noexcept {
    const double r = std::round(x.hi);
    if (r != x.hi) return r;
    // hi is integral; lo decides only at an exact half-way split.
    if (x.lo > 0.5) return r + 1.0;
    if (x.lo < -0.5) return r - 1.0;
    if (x.lo == 0.5) return r + 1.0;
    if (x.lo == -0.5) return r - 1.0;
    return r;
}

std::vector<DoubleWord> log_table(std::size_t n_max) {
    std::vector<DoubleWord> table(n_max + 1);
    if (n_max < 2) return table;
    // Anchor at powers of two to stop error accumulation along the recurrence.
    for (std::size_t n = 2; n <= n_max; ++n) {
        if ((n & (n - 1)) == 0) {
            table[n] = kLn2 * std::log2(static_cast<double>(n));
            continue;
        }
        const DoubleWord u = DoubleWord(1.0) / static_cast<double>(2 * n - 1);
        table[n] = table[n - 1] + two_atanh(u);
    }
    return table;
}

}  // namespace dw
}  // namespace zsign
