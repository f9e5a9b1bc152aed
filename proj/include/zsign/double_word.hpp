#pragma once

// Double-word ("double-double") arithmetic: an unevaluated sum hi + lo with
// |lo| <= ulp(hi)/2, giving ~106 bits of significand. Used wherever a phase of
// size t*log(n) must be reduced modulo 2*pi with absolute accuracy far below
// ulp(t).

#include <cstddef>
#include <vector>

namespace zsign {

struct DoubleWord {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleWord() = default;
    constexpr DoubleWord(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
    constexpr DoubleWord(double h, double l) : hi(h), lo(l) {}

    double value() const noexcept { return hi + lo; }
};

DoubleWord operator+(DoubleWord a, DoubleWord b) noexcept;
DoubleWord operator-(DoubleWord a, DoubleWord b) noexcept;
DoubleWord operator-(DoubleWord a) noexcept;
DoubleWord operator*(DoubleWord a, DoubleWord b) noexcept;
DoubleWord operator*(DoubleWord a, double b) noexcept;
DoubleWord operator/(DoubleWord a, DoubleWord b) noexcept;
DoubleWord operator/(DoubleWord a, double b) noexcept;

namespace dw {

inline constexpr DoubleWord kPi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DoubleWord kTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DoubleWord kPiOver8{0.39269908169872414, 1.5308084989341915e-17};
inline constexpr DoubleWord kLn2{0.6931471805599453, 2.3190468138462996e-17};

/// Natural logarithm, x > 0, accurate to a few units of 2^-104 relative.
DoubleWord log(DoubleWord x);

/// x - 2*pi*k for the integer k that lands the result in [-pi, pi].
double reduce_two_pi(DoubleWord x) noexcept;

/// Nearest integer to x (ties away from zero). |x| < 2^52 assumed.
double round(DoubleWord x) noexcept;

/// log(1), ..., log(n_max) in double-word precision, index 0 unused (= 0).
/// Built incrementally from log(n+1) = log(n) + 2 atanh(1/(2n+1)).
std::vector<DoubleWord> log_table(std::size_t n_max);

}  // namespace dw
}  // namespace zsign
