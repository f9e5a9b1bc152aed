#include <doctest.h>

#include <cmath>

#include "zsign/error.hpp"
#include "zsign/hardy_z.hpp"
#include "zsign/mollified_means.hpp"
#include "zsign/mollifier.hpp"
#include "zsign/quadrature.hpp"
#include "zsign/zero_scan.hpp"

using namespace zsign;

namespace {

const ScanConfig kCfg{};

double weight(double t, const CoeffTable& table) { return std::norm(eval_B(t, table)); }

}  // namespace

TEST_CASE("degenerate mollifier reduces to the plain integral") {
    // 1000^0.05 = 1.41, so B = 1.
    const QuadratureResult r = mean_Z_B2(1000.0, 0.05, kCfg);
    CHECK(r.X < 2.0);
    const AdaptiveResult plain =
        integrate_adaptive([](double t) { return z_eval(t, kCfg); }, 1000.0, 2000.0, 1e-9, 200000);
    REQUIRE(plain.converged);
    CHECK(std::fabs(r.value - plain.value) <= r.error_estimate + plain.error + 1e-9);
}

TEST_CASE("agrees with an independent adaptive quadrature") {
    const double T = 1000.0, theta = 0.2;
    const QuadratureResult r = mean_Z_B2(T, theta, kCfg);
    CHECK(r.converged);
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.within_hypothesis);
    const CoeffTable table = make_coeff_table(std::pow(T, theta));
    const AdaptiveResult ref = integrate_adaptive(
        [&](double t) { return z_eval(t, kCfg) * weight(t, table); }, T, 2 * T, 1e-9, 200000);
    REQUIRE(ref.converged);
    CHECK(std::fabs(r.value - ref.value) <= r.error_estimate + ref.error + 1e-9);
    MESSAGE("mean_Z_B2(1000, 0.2)/T = " << r.value / T);
}

TEST_CASE("triangle domination and nonnegativity") {
    for (double theta : {0.05, 0.2}) {
        const QuadratureResult s = mean_Z_B2(1000.0, theta, kCfg);
        const QuadratureResult a = mean_absZ_B2(1000.0, theta, kCfg);
        const QuadratureResult q = mean_Z2_B4(1000.0, theta, kCfg);
        CHECK(std::fabs(s.value) <= a.value);
        CHECK(a.value >= 0.0);
        CHECK(q.value >= 0.0);
        CHECK(a.converged);
        CHECK(q.converged);
        CHECK(!q.within_hypothesis);
    }
}

TEST_CASE("zero-split absolute mean agrees with adaptive quadrature between zeros") {
    const QuadratureResult a = mean_absZ_B2(1000.0, 0.05, kCfg);
    std::vector<double> edges{1000.0};
    for (const ZeroRecord& z : find_zeros(1000.0, 2000.0, kCfg)) edges.push_back(z.gamma);
    edges.push_back(2000.0);
    double value = 0.0, error = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const AdaptiveResult seg =
            integrate_adaptive([](double t) { return std::fabs(z_eval(t, kCfg)); }, edges[i], edges[i + 1], 1e-13);
        value += seg.value;
        error += seg.error;
    }
    CHECK(std::fabs(a.value - value) <= a.error_estimate + error + 1e-10);
}

TEST_CASE("sign-split identity") {
    for (double theta : {0.05, 0.2}) {
        const SignSplitReport r = sign_split_check(1000.0, theta, kCfg);
        CAPTURE(theta);
        CHECK(r.holds);
        CHECK(r.difference <= r.tolerance);
        CHECK(r.half_sum == doctest::Approx(0.5 * (r.signed_mean.value + r.absolute_mean.value)));
    }
}

TEST_CASE("Cauchy-Schwarz step") {
    const CauchySchwarzReport r = cauchy_schwarz_check(1000.0, 0.2, kCfg);
    CHECK(r.holds);
    CHECK(r.bound >= r.positive_part.value);
    CHECK(r.mu_plus > 0.0);
    CHECK(r.mu_plus <= 1000.0);
    MESSAGE("slack factor " << r.slack_factor);
}

TEST_CASE("second moment growth diagnostic") {
    const double at_T = mean_Z2_B4(1000.0, 0.005, kCfg).value;
    const double at_2T = mean_Z2_B4(2000.0, 0.005, kCfg).value;
    MESSAGE("Z^2 mean growth factor 1000 -> 2000: " << at_2T / at_T);
    CHECK(at_2T > at_T);
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(mean_Z_B2(50.0, 0.1, kCfg), UsageError);
    CHECK_THROWS_AS(mean_Z_B2(1000.0, 0.0, kCfg), UsageError);
    CHECK_THROWS_AS(mean_Z2_B4(1000.0, -1.0, kCfg), UsageError);
}
