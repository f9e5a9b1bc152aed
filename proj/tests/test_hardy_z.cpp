#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zsign/error.hpp"
#include "zsign/hardy_z.hpp"
#include "zsign/theta.hpp"
#include "zsign/zeta.hpp"

using namespace zsign;

namespace {
const ScanConfig kCfg{};
}

TEST_CASE("Z is even") {
    for (double t : {0.0, 14.0, 250.0, 499.9, 500.0, 12345.678, 1e7 + 0.5})
        CHECK(z_eval(-t, kCfg) == z_eval(t, kCfg));
}

TEST_CASE("modulus agrees with the Euler-Maclaurin oracle") {
    for (double t : {50.0, 500.0, 5000.0, 123456.0})
        CHECK(std::fabs(std::fabs(z_eval(t, kCfg)) - std::abs(zeta_em(0.5, t))) <= 1e-8);
}

TEST_CASE("reference values across the height range") {
    for (const auto& s : oracle::kZSamples) {
        CAPTURE(s.t);
        CHECK(std::fabs(z_eval(s.t, kCfg) - s.z) <= 1e-8);
    }
}

TEST_CASE("sign change at the first zero") {
    CHECK(z_eval(14.0, kCfg) < 0.0);
    CHECK(z_eval(14.2, kCfg) > 0.0);
}

TEST_CASE("Riemann-Siegel coefficients") {
    for (const auto& ref : oracle::kRsCoefficients)
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(ref.p);
            CAPTURE(k);
            CHECK(std::fabs(detail::rs_coefficient(k, ref.p) - ref.c[k]) <= 1e-14);
        }
}

TEST_CASE("correction-order convergence") {
    // The change from one more correction term shrinks as t grows.
    for (int k = 1; k < kMaxCorrectionOrder; ++k) {
        double previous = INFINITY;
        for (double t : {1e3 + 0.3, 1e5 + 0.3, 1e7 + 0.3}) {
            const double change = std::fabs(detail::rs_remainder(t, k + 1) - detail::rs_remainder(t, k));
            CHECK(change < previous);
            previous = change;
        }
    }
}

TEST_CASE("critical point carries the phase") {
    const CriticalPoint p = critical_point(100.0, kCfg);
    CHECK(p.t == 100.0);
    CHECK(p.z == z_eval(100.0, kCfg));
    CHECK(p.phase == doctest::Approx(oracle::kTheta100).epsilon(1e-13));
}

TEST_CASE("precision guard") {
    CHECK_THROWS_AS(z_eval(2e13, kCfg), PrecisionExhausted);
    ScanConfig bad;
    bad.rs_correction_order = 0;
    CHECK_THROWS_AS(z_eval(1000.0, bad), UsageError);
}
