#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zsign/double_word.hpp"

using namespace zsign;

TEST_CASE("arithmetic carries the low word") {
    const DoubleWord third = DoubleWord(1.0) / DoubleWord(3.0);
    const DoubleWord back = third * 3.0;
    CHECK(back.hi == 1.0);
    CHECK(std::fabs(back.lo) < 1e-31);

    const DoubleWord big(1e16);
    const DoubleWord sum = big + DoubleWord(1.0) - big;
    CHECK(sum.value() == 1.0);
}

TEST_CASE("log matches reference values") {
    const DoubleWord l2 = dw::log(DoubleWord(2.0));
    CHECK(l2.hi == dw::kLn2.hi);
    CHECK(std::fabs(l2.lo - dw::kLn2.lo) < 1e-31);

    const DoubleWord l = dw::log(DoubleWord(12345.0));
    CHECK(std::fabs(l.hi - oracle::kLog12345) <= 2e-15);

    // log(a b) = log a + log b to double-word accuracy.
    const DoubleWord a(1234.5678), b(0.000321);
    const DoubleWord diff = dw::log(a * b) - (dw::log(a) + dw::log(b));
    CHECK(std::fabs(diff.value()) < 1e-29);
}

TEST_CASE("log table agrees with log") {
    const auto table = dw::log_table(5000);
    REQUIRE(table.size() == 5001);
    CHECK(table[1].value() == 0.0);
    for (std::size_t n : {2, 3, 7, 64, 1000, 1023, 1025, 4999, 5000}) {
        const DoubleWord d = table[n] - dw::log(DoubleWord(static_cast<double>(n)));
        CHECK(std::fabs(d.value()) < 1e-29);
    }
}

TEST_CASE("phase reduction keeps sub-ulp digits") {
    const DoubleWord phase = dw::log(DoubleWord(12345.0)) * 1e8;
    CHECK(dw::reduce_two_pi(phase) == doctest::Approx(oracle::kReduced1e8Log12345).epsilon(1e-13));

    const DoubleWord shifted = dw::kTwoPi * 123456789.0 + DoubleWord(1.25);
    CHECK(std::fabs(dw::reduce_two_pi(shifted) - 1.25) < 1e-13);
    CHECK(std::fabs(dw::reduce_two_pi(DoubleWord(3.0))) <= M_PI);
}

TEST_CASE("round") {
    CHECK(dw::round(DoubleWord(2.5)) == 3.0);
    CHECK(dw::round(DoubleWord(-2.5)) == -3.0);
    CHECK(dw::round(DoubleWord(7.0, -1e-20)) == 7.0);
    CHECK(dw::round(DoubleWord(1e15, 0.75)) == 1e15 + 1.0);
}
