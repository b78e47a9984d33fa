#include <gtest/gtest.h>

#include "k4cube/closed_form.hpp"
#include "reference_values.hpp"

using namespace k4cube;

namespace {

Wide brute_range_min(std::uint64_t a, std::uint64_t b, int n) {
    Wide best = std::numeric_limits<Wide>::max();
    for (std::uint64_t m = a; m < b; ++m) best = std::min(best, xi_h4(m, n));
    return best;
}

}  // namespace

TEST(Decompose, Exponents) {
    EXPECT_EQ(decompose(13).exponents, (std::vector<int>{3, 2, 0}));
    EXPECT_EQ(decompose(13).last_index(), 2);
    EXPECT_EQ(decompose(1).exponents, (std::vector<int>{0}));
    EXPECT_THROW(decompose(0), std::invalid_argument);
}

TEST(Hypercube, DensityValues) {
    EXPECT_EQ(ex_qn(0, 3), 0);
    EXPECT_EQ(ex_qn(4, 3), 8);
    EXPECT_EQ(ex_qn(8, 3), 24);
    EXPECT_EQ(ex_qn(3, 3), 4);
    EXPECT_EQ(xi_qn(4, 3), 4);
    EXPECT_THROW(ex_qn(9, 3), std::out_of_range);
}

TEST(FValue, SmallValues) {
    EXPECT_EQ(f_value(1), 0);
    EXPECT_EQ(f_value(2), 2);
    EXPECT_EQ(f_value(3), 6);
    EXPECT_EQ(f_value(4), 12);
    EXPECT_EQ(f_value(15), 70);
    EXPECT_EQ(ex_h4(15, 4), 70);
    EXPECT_EQ(ex_h4(16, 4), 80);
}

TEST(FValue, EvenAndAboveHypercube) {
    for (std::uint64_t m = 0; m <= 4096; ++m) {
        EXPECT_EQ(f_value(m) % 2, 0) << m;
        EXPECT_GE(f_value(m), ex_qn(m, 12));
    }
}

TEST(Xi, PublishedRows) {
    for (const auto& row : k4ref::profile_rows())
        for (std::size_t i = 0; i < row.xi.size(); ++i)
            EXPECT_EQ(xi_h4(i + 1, row.n), row.xi[i]) << "n=" << row.n << " m=" << i + 1;
}

TEST(Xi, Symmetry) {
    for (int n = 2; n <= 12; ++n)
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
            ASSERT_EQ(xi_h4(m, n), xi_h4((std::uint64_t{1} << n) - m, n)) << n << ' ' << m;
}

TEST(Xi, Errors) {
    EXPECT_THROW(xi_h4(0, 4), std::out_of_range);
    EXPECT_THROW(xi_h4(16, 4), std::out_of_range);
    EXPECT_THROW(xi_h4(1, 1), std::out_of_range);
    EXPECT_THROW(ex_h4(1, kMaxClosedFormDimension + 1), std::out_of_range);
}

TEST(Xi, WideArithmeticAtLargeN) {
    const int n = 60;
    const auto half = std::uint64_t{1} << 59;
    EXPECT_EQ(xi_h4(half, n), pow2(59));
    EXPECT_EQ(xi_h4(1, n), 61);
    EXPECT_EQ(to_string(pow2(100)), "1267650600228229401496703205376");
    EXPECT_EQ(to_string(-Wide{42}), "-42");
}

TEST(Lambda, PublishedRows) {
    for (const auto& row : k4ref::profile_rows())
        for (std::size_t i = 0; i < row.lambda.size(); ++i) {
            EXPECT_EQ(lambda_scan(i + 1, row.n), row.lambda[i]) << "n=" << row.n << " h=" << i + 1;
            EXPECT_EQ(lambda_fast(i + 1, row.n), row.lambda[i]) << "n=" << row.n << " h=" << i + 1;
        }
}

TEST(Lambda, SpotValues) {
    EXPECT_EQ(lambda_scan(9, 6), 29);
    EXPECT_EQ(lambda_scan(64, 7), 64);
    EXPECT_EQ(lambda_fast(1, 3), 4);
    EXPECT_THROW(lambda_scan(0, 5), std::out_of_range);
    EXPECT_THROW(lambda_scan(17, 5), std::out_of_range);
    EXPECT_THROW(lambda_scan(1, kMaxScanDimension + 1), std::out_of_range);
}

TEST(Lambda, FastMatchesScanModerateN) {
    for (int n = 3; n <= 14; ++n) {
        const auto p = full_profile(n);  // full_profile cross-checks fast against the suffix minimum
        for (std::uint64_t h = 1; h <= p.half(); ++h) ASSERT_EQ(lambda_fast(h, n), p.lambda(h));
    }
}

TEST(Lambda, FastBeyondTableRange) {
    // Spot checks past the materialized range against the direct scan.
    const int n = 26;
    for (std::uint64_t h : {std::uint64_t{1}, std::uint64_t{5000}, std::uint64_t{8189}, std::uint64_t{9000},
                            std::uint64_t{1} << 22, (std::uint64_t{1} << 25) / 3 - 1})
        EXPECT_EQ(lambda_fast(h, n), lambda_scan(h, n)) << h;
}

TEST(Intervals, SmallN) {
    const auto i7 = concentration_intervals(7);
    ASSERT_EQ(i7.size(), 3u);
    EXPECT_EQ(i7[0].g, 3);
    EXPECT_EQ(i7[0].lower, 13);
    EXPECT_EQ(i7[0].upper, 16);
    EXPECT_EQ(i7[0].value, 48);
    const auto i6 = concentration_intervals(6);
    EXPECT_EQ(i6[0].g, 2);
    EXPECT_EQ(i6[0].lower, 6);
    EXPECT_EQ(i6[0].upper, 8);
    EXPECT_EQ(i6[0].value, 24);
}

TEST(Intervals, LengthsAndSubdivision) {
    EXPECT_EQ(g_interval_length(0, 8), 2);
    EXPECT_EQ(g_interval_length(1, 8), 6);
    EXPECT_EQ(g_interval_length(2, 8), 22);
    EXPECT_EQ(g_interval_length(0, 9), 3);
    EXPECT_EQ(g_interval_length(1, 9), 11);
    // The lower end is 2^{ceil(n/2)+t} - g_t.
    EXPECT_EQ(m_td(1, 2, 8), 26);
    EXPECT_EQ(m_td(1, 0, 8), 32);
    EXPECT_EQ(m_td(1, 1, 8), 28);
    for (int n = 3; n <= 30; ++n)
        for (const auto& c : concentration_intervals(n)) EXPECT_EQ(m_td(c.t, c.t + 1, n), c.lower) << n;
    EXPECT_THROW(g_interval_length(4, 8), std::out_of_range);
    EXPECT_THROW(m_td(0, 2, 8), std::out_of_range);
}

TEST(Intervals, ValuesHoldAcrossTheInterval) {
    for (int n = 3; n <= 16; ++n)
        for (const auto& c : concentration_intervals(n))
            for (Wide h = c.lower; h <= c.upper; ++h)
                ASSERT_EQ(lambda_scan(static_cast<std::uint64_t>(h), n), c.value) << n << " t=" << c.t;
}

TEST(Conditional, PublishedRows) {
    for (const auto& row : k4ref::conditional_rows())
        for (std::size_t i = 0; i < row.by_l.size(); ++i)
            for (auto p : kNonCyclicPatterns) EXPECT_EQ(conditional_lambda(p, static_cast<int>(i) + 2, row.n), row.by_l[i]);
}

TEST(Conditional, LowLevelsAndErrors) {
    EXPECT_EQ(conditional_lambda(FaultPattern::SuperDegree, 0, 4), 5);
    EXPECT_EQ(conditional_lambda(FaultPattern::ExtraSize, 1, 4), 8);
    EXPECT_THROW(conditional_lambda(FaultPattern::Embedded, 1, 4), std::out_of_range);
    EXPECT_THROW(conditional_lambda(FaultPattern::SuperDegree, 4, 4), std::out_of_range);
    EXPECT_THROW(conditional_lambda(FaultPattern::Cyclic, 2, 4), std::invalid_argument);
}

TEST(Cyclic, Values) {
    EXPECT_EQ(cyclic_lambda(3), 4);
    EXPECT_EQ(cyclic_lambda(4), 8);
    EXPECT_EQ(cyclic_lambda(5), 12);
    EXPECT_EQ(cyclic_lambda(10), 27);
    EXPECT_THROW(cyclic_lambda(2), std::out_of_range);
}

TEST(DyadicRangeMin, MatchesDirectScan) {
    for (int n = 3; n <= 10; ++n) {
        const detail::DyadicXiMin rm(n);
        const std::uint64_t top = std::uint64_t{1} << n;
        for (std::uint64_t a = 1; a < top; a += (n <= 7 ? 1 : 7))
            for (std::uint64_t b = a + 1; b <= top; b += (n <= 7 ? 1 : 5))
                ASSERT_EQ(rm.range_min(a, b), brute_range_min(a, b, n)) << n << " [" << a << ',' << b << ')';
    }
}

TEST(Profile, ShapeAndErrors) {
    const auto p = full_profile(5);
    EXPECT_EQ(p.dimension(), 5);
    EXPECT_EQ(p.half(), 16u);
    EXPECT_EQ(p.ex(15), 70);
    EXPECT_EQ(p.xi(1), 6);
    EXPECT_THROW(p.xi(17), std::out_of_range);
    EXPECT_THROW(full_profile(2), std::out_of_range);
    EXPECT_THROW(full_profile(kMaxProfileDimension + 1), std::out_of_range);
}
