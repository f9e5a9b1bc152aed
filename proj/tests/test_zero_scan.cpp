#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "oracles.hpp"
#include "zsign/error.hpp"
#include "zsign/hardy_z.hpp"
#include "zsign/pair_correlation.hpp"
#include "zsign/theta.hpp"
#include "zsign/zero_scan.hpp"

using namespace zsign;

namespace {

const ScanConfig kCfg{};

std::pair<long, long> sign_counts(const std::vector<ZeroRecord>& zeros) {
    long plus = 0, minus = 0;
    for (const ZeroRecord& z : zeros) (z.derivative_sign == DerivativeSign::plus ? plus : minus) += 1;
    return {plus, minus};
}

}  // namespace

TEST_CASE("count audit") {
    CHECK(count_audit(1e-9, 100.0) == 29);
    CHECK(count_audit(500.0, 500.0) == 0);
    CHECK(count_audit(14.0, 22.0) == 2);
    for (const auto& ref : oracle::kZeroCounts) {
        CAPTURE(ref.T);
        CHECK(zero_count_estimate(ref.T, kCfg) == ref.n);
    }
    CHECK(asymptotic_zero_count(2 * M_PI * M_E) == doctest::Approx(M_E).epsilon(1e-14));
}

TEST_CASE("Gram points") {
    CHECK(gram_point(0) == doctest::Approx(oracle::kThetaRoot).epsilon(1e-14));
    for (long j : {1L, 10L, 1000L, 1000000L}) {
        const double g = gram_point(j);
        CHECK(std::fabs(theta_dw(g).value() / M_PI - static_cast<double>(j)) <= 1e-9);
    }
}

TEST_CASE("find_zeros on small intervals") {
    CHECK(find_zeros(2.0, 5.0, kCfg).empty());
    const auto one = find_zeros(14.0, 15.0, kCfg);
    REQUIRE(one.size() == 1);
    CHECK(std::fabs(one[0].gamma - oracle::kGamma1) <= 1e-9);
    CHECK(one[0].bracket_width <= kCfg.bisection_tol);

    const auto first = find_zeros(0.0, 100.0, kCfg);
    CHECK(first.size() == 29);
    CHECK(std::fabs(first[1].gamma - oracle::kGamma2) <= 1e-9);
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].index_in_scan == i);
}

TEST_CASE("completeness against N(T)") {
    const auto zeros = find_zeros(0.0, 10000.0, kCfg);
    CHECK(static_cast<long>(zeros.size()) == 10142);
    CHECK(std::is_sorted(zeros.begin(), zeros.end(), [](auto& a, auto& b) { return a.gamma < b.gamma; }));
    long between = 0;
    for (const ZeroRecord& z : zeros) between += (z.gamma > 1000.0 && z.gamma <= 5000.0) ? 1 : 0;
    CHECK(between == 4520 - 649);
}

TEST_CASE("classification alternates and balances") {
    const auto zeros = classify(find_zeros(0.0, 1000.0, kCfg), kCfg);
    REQUIRE(zeros.size() == 649);
    CHECK(zeros.front().derivative_sign == DerivativeSign::plus);
    for (std::size_t i = 1; i < zeros.size(); ++i) CHECK(zeros[i].derivative_sign != zeros[i - 1].derivative_sign);
    const auto [plus, minus] = sign_counts(zeros);
    CHECK(std::abs(plus - minus) <= 1);

    const auto [p4, m4] = sign_counts(classify(find_zeros(0.0, 10000.0, kCfg), kCfg));
    CHECK(std::abs(p4 - m4) <= 1);
}

TEST_CASE("classify rejects a repeated sign") {
    auto zeros = find_zeros(14.0, 22.0, kCfg);
    REQUIRE(zeros.size() == 2);
    zeros.push_back(zeros[0]);
    zeros.back().gamma = oracle::kGamma2 + 1.5;  // not a zero: Z keeps its sign across it
    CHECK_THROWS_AS(classify(zeros, kCfg), AlternationViolation);
}

TEST_CASE("scan is deterministic") {
    const auto a = find_zeros(5000.0, 5200.0, kCfg);
    const auto b = find_zeros(5000.0, 5200.0, kCfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].gamma == b[i].gamma);
        CHECK(a[i].bracket_width == b[i].bracket_width);
    }
}

TEST_CASE("bracket width at large height") {
    const auto zeros = find_zeros(1e8, 1e8 + 5.0, kCfg);
    REQUIRE(!zeros.empty());
    for (const ZeroRecord& z : zeros) {
        // Either the tolerance is met or the bracket is two adjacent doubles.
        const double ulp = std::nextafter(z.gamma, INFINITY) - z.gamma;
        CHECK(z.bracket_width <= std::max(kCfg.bisection_tol, 2.0 * ulp));
    }
}

TEST_CASE("gap statistics on (5000, 10000]") {
    const auto zeros = find_zeros(5000.0, 10000.0, kCfg);
    const GapStats stats = gap_stats(zeros, 30, 3.0);
    const auto& g = stats.normalized_gaps;
    REQUIRE(g.size() == zeros.size() - 1);
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    CHECK(std::fabs(mean - 1.0) <= 0.05);
    CHECK(*std::min_element(g.begin(), g.end()) > 0.0);

    const long binned = std::accumulate(stats.histogram.begin(), stats.histogram.end(), 0L);
    CHECK(binned + stats.overflow == static_cast<long>(g.size()));

    // Small gaps are suppressed roughly as the density predicts (heuristic, loose).
    const double small = static_cast<double>(std::count_if(g.begin(), g.end(), [](double u) { return u <= 0.3; })) /
                         static_cast<double>(g.size());
    const double predicted = f_alpha(0.3);
    MESSAGE("fraction of gaps <= 0.3: " << small << ", density integral: " << predicted);
    CHECK(std::fabs(small - predicted) <= 0.05);
}

TEST_CASE("gap statistics argument checks") {
    const auto zeros = find_zeros(14.0, 15.0, kCfg);
    CHECK_THROWS_AS(gap_stats(zeros, 10, 3.0), std::invalid_argument);
}

TEST_CASE("N+ and N- at given spacing") {
    const double T = 1000.0;
    const auto zeros = classify(find_zeros(0.0, T, kCfg), kCfg);
    const auto [p0, m0] = n_pm_alpha(zeros, T, 0.0);
    CHECK(p0 + m0 == static_cast<long>(zeros.size()) - 1);
    const auto [pi, mi] = n_pm_alpha(zeros, T, 1e9);
    CHECK(pi == 0);
    CHECK(mi == 0);
    const auto [ph, mh] = n_pm_alpha(zeros, T, 0.5);
    CHECK(ph <= p0);
    CHECK(mh <= m0);
}
