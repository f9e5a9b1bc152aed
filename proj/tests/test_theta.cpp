#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "zsign/theta.hpp"

using namespace zsign;

TEST_CASE("theta reference values") {
    CHECK(theta(0.0) == 0.0);
    CHECK(std::fabs(theta(10.0) - oracle::kTheta10) <= 1e-10);
    CHECK(std::fabs(theta(14.5) - oracle::kTheta14_5) <= 1e-10);
    CHECK(std::fabs(theta(50.0) - oracle::kTheta50) <= 1e-10);
    CHECK(std::fabs(theta(100.0) - oracle::kTheta100) <= 1e-10);
    CHECK(std::fabs(theta(1000.0) - oracle::kTheta1000) <= 1e-10);
    CHECK(std::fabs(theta(1e5) - oracle::kTheta1e5) <= 1e-10);
}

TEST_CASE("double-word theta at large t") {
    const DoubleWord t7 = theta_dw(1e7) - DoubleWord(oracle::kTheta1e7Int);
    CHECK(std::fabs(t7.value() - oracle::kTheta1e7Frac) <= 1e-10);
    const DoubleWord t8 = theta_dw(1e8) - DoubleWord(oracle::kTheta1e8Int);
    CHECK(std::fabs(t8.value() - oracle::kTheta1e8Frac) <= 1e-10);
    CHECK(std::fabs(theta_dw(1000.0).value() - oracle::kTheta1000) <= 1e-11);
}

TEST_CASE("theta is odd and has its first positive root near 17.8456") {
    for (double t : {0.5, 10.0, 49.9, 50.1, 100.0, 1e6}) CHECK(theta(-t) == -theta(t));

    double lo = 15.0, hi = 20.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (theta(mid) < 0 ? lo : hi) = mid;
    }
    CHECK(std::fabs(lo - oracle::kThetaRoot) <= 1e-5);
}

TEST_CASE("both theta routes agree where they overlap") {
    for (double t : {20.0, 35.0, 50.0, 80.0})
        CHECK(std::fabs(detail::theta_log_gamma(t) - detail::theta_asymptotic(t)) <= 1e-11);
}

TEST_CASE("theta derivative") {
    for (double t : {12.0, 100.0, 1e4}) {
        const double h = 1e-4 * t;
        const double numeric = (theta(t + h) - theta(t - h)) / (2 * h);
        CHECK(theta_derivative(t) == doctest::Approx(numeric).epsilon(1e-7));
    }
}

TEST_CASE("chi on the critical line") {
    for (double t : {10.0, 100.0, 1000.0}) CHECK(std::abs(chi_half(t)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(chi_half(0.0) - std::complex<double>(1.0, 0.0)) <= 1e-12);
    for (double t : {10.0, 77.7, 1000.0, 123456.0, 1e8}) {
        const double phase = dw::reduce_two_pi(theta_dw(t) * 2.0);
        CHECK(std::abs(chi_half(t) * std::polar(1.0, phase) - 1.0) <= 1e-10);
    }
    const std::complex<double> lead = chi_half_leading(1000.0);
    CHECK(std::abs(chi_half(1000.0) - lead) / std::abs(lead) <= 1e-2);
}
