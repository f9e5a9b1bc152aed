#include <doctest.h>

#include <cmath>
#include <numeric>

#include "zsign/quadrature.hpp"

using namespace zsign;

TEST_CASE("Gauss-Legendre exactness") {
    for (int n : {1, 2, 5, 8, 20}) {
        const GaussLegendreRule rule = gauss_legendre(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
        // x^k integrates exactly for k <= 2n - 1.
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
            CHECK(sum == doctest::Approx(exact).scale(1.0).epsilon(1e-14));
        }
    }
    CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("adaptive integration") {
    const AdaptiveResult e = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-13);
    CHECK(e.converged);
    CHECK(std::fabs(e.value - (M_E - 1.0)) <= 1e-13);

    const AdaptiveResult s = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
    CHECK(s.converged);
    CHECK(std::fabs(s.value - 2.0 / 3.0) <= 1e-10);

    const AdaptiveResult o = integrate_adaptive([](double x) { return std::cos(50.0 * x); }, 0.0, 3.0, 1e-12);
    CHECK(std::fabs(o.value - std::sin(150.0) / 50.0) <= 1e-12);

    const AdaptiveResult empty = integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, 1e-12);
    CHECK(empty.value == 0.0);
    CHECK(empty.converged);

    const AdaptiveResult capped = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-15, 8);
    CHECK(!capped.converged);
}
