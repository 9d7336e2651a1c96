#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "revfree/permanent.hpp"
#include "revfree/projective_plane.hpp"

using namespace revfree;

TEST(Permanent, Identity) {
    for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(permanent(BinaryMatrix::identity(n)), 1);
}

TEST(Permanent, AllOnesIsFactorial) {
    EXPECT_EQ(permanent(BinaryMatrix::all_ones(3, 3)), 6);
    BigInt f = 1;
    for (int i = 2; i <= 12; ++i) f *= i;
    EXPECT_EQ(permanent(BinaryMatrix::all_ones(12, 12)), f);
}

TEST(Permanent, FanoAgreesWithBruteForce) {
    const auto a = incidence_matrix(plane_build(GaloisField(2, 1)));
    EXPECT_EQ(oracle::brute_permanent(a), 24u);
    EXPECT_EQ(permanent(a), 24);
}

TEST(Permanent, RandomMatricesAgreeWithBruteForce) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 7; ++n)
        for (int t = 0; t < 40; ++t) {
            const auto a = oracle::random_matrix(rng, n, n, 0.2 + 0.02 * t);
            EXPECT_EQ(permanent(a), oracle::brute_permanent(a)) << a.to_string();
        }
}

TEST(Permanent, WideBigIntegerPathMatchesFactorial) {
    // Side 27 takes the arbitrary-precision product branch; a 27x27 all-ones
    // is too slow, so use a block-diagonal matrix whose permanent is a product.
    BinaryMatrix a(27, 27);
    for (std::size_t b = 0; b < 9; ++b)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.set(3 * b + i, 3 * b + j);
    BigInt expected = 1;
    for (int b = 0; b < 9; ++b) expected *= 6;
    EXPECT_EQ(permanent(a), expected);
}

TEST(Permanent, Errors) {
    EXPECT_THROW(permanent(BinaryMatrix(2, 3)), precondition_error);
    EXPECT_THROW(permanent(BinaryMatrix(31, 31)), capacity_error);
    EXPECT_EQ(permanent(BinaryMatrix(4, 4)), 0);
}

TEST(RegularLowerBound, Examples) {
    EXPECT_NEAR(regular_permanent_lower_bound(7, 3), 5040.0 * std::pow(3.0 / 7.0, 7), 1e-9);
    EXPECT_NEAR(regular_permanent_lower_bound(7, 3), 13.385, 1e-3);
    EXPECT_NEAR(regular_permanent_lower_bound(6, 6), 720.0, 1e-6);
    EXPECT_NEAR(regular_permanent_lower_bound(2, 1), 0.5, 1e-12);
    EXPECT_THROW(regular_permanent_lower_bound(3, 0), precondition_error);
    EXPECT_THROW(regular_permanent_lower_bound(3, 4), precondition_error);
}

TEST(RegularLowerBound, BelowPermanentOfRegularMatrices) {
    for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t d = 1; d <= n; ++d) {
            const auto a = oracle::circulant(n, d);
            EXPECT_GE(static_cast<double>(permanent(a)), regular_permanent_lower_bound(n, d) * (1 - 1e-12))
                << "n=" << n << " d=" << d;
        }
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto a = incidence_matrix(plane_build(GaloisField::of_order(q)));
        EXPECT_GE(static_cast<double>(permanent(a)), regular_permanent_lower_bound(a.rows(), q + 1));
    }
}
