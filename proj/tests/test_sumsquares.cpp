#include <gtest/gtest.h>

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include "sosq/sumsquares.hpp"

using namespace sosq;

namespace {

bool brute_two(long n)
{
    for (long a = 0; a * a <= n; ++a) {
        for (long b = a; a * a + b * b <= n; ++b) {
            if (a * a + b * b == n) return true;
        }
    }
    return false;
}

std::vector<std::pair<BigInt, unsigned>> fac(std::initializer_list<std::pair<int, unsigned>> l)
{
    std::vector<std::pair<BigInt, unsigned>> out;
    for (auto [p, e] : l) out.emplace_back(BigInt(p), e);
    return out;
}

BigInt sq_sum(const IntPair& p) { return norm2(p); }
BigInt sq_sum(const IntQuad& q) { return norm4(q); }

} // namespace

TEST(Factorize, Examples)
{
    EXPECT_TRUE(factorize(1).factors.empty());
    EXPECT_EQ(factorize(45).factors, fac({{3, 2}, {5, 1}}));
    EXPECT_EQ(factorize(9999).factors, fac({{3, 2}, {11, 1}, {101, 1}}));
    EXPECT_EQ(factorize(2).factors, fac({{2, 1}}));
    EXPECT_EQ(factorize(1024).factors, fac({{2, 10}}));
    EXPECT_THROW(factorize(0), std::invalid_argument);
    EXPECT_THROW(factorize(-5), std::invalid_argument);
}

TEST(Factorize, ProductOfPrimesRebuildsN)
{
    boost::random::mt19937 gen(3);
    for (long n = 1; n <= 5000; ++n) {
        const auto f = factorize(n);
        BigInt prod = 1;
        for (const auto& [p, e] : f.factors) {
            ASSERT_TRUE(boost::multiprecision::miller_rabin_test(p, 25, gen)) << p;
            ASSERT_GE(e, 1u);
            for (unsigned k = 0; k < e; ++k) prod *= p;
        }
        ASSERT_EQ(prod, n);
    }
    // a product of two 7-digit primes, beyond 32 bits
    const BigInt big = BigInt(1000003) * BigInt(1000033);
    EXPECT_EQ(factorize(big).factors, fac({{1000003, 1}, {1000033, 1}}));
}

TEST(Isqrt, Basics)
{
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(15), 3);
    EXPECT_EQ(isqrt(16), 4);
    const BigInt huge = BigInt(1) << 200;
    EXPECT_EQ(isqrt(huge), BigInt(1) << 100);
    EXPECT_EQ(isqrt(huge - 1), (BigInt(1) << 100) - 1);
    EXPECT_TRUE(is_perfect_square(49));
    EXPECT_FALSE(is_perfect_square(50));
}

TEST(SumOfTwoSquares, Examples)
{
    EXPECT_TRUE(is_sum_of_two_squares(5));
    EXPECT_FALSE(is_sum_of_two_squares(21));
    EXPECT_TRUE(is_sum_of_two_squares(45));
    EXPECT_TRUE(is_sum_of_two_squares(1));
    EXPECT_TRUE(is_sum_of_two_squares(9));
    EXPECT_FALSE(is_sum_of_two_squares(3));
}

TEST(SumOfTwoSquares, AgreesWithBruteForce)
{
    for (long n = 1; n <= 10000; ++n) ASSERT_EQ(is_sum_of_two_squares(n), brute_two(n)) << n;
}

TEST(TwoSquareDecompose, Examples)
{
    const auto two = two_square_decompose(2);
    ASSERT_TRUE(two);
    EXPECT_EQ(two->components, pair_of<BigInt>(1, 1));

    const auto r65 = two_square_decompose(65);
    ASSERT_TRUE(r65);
    EXPECT_EQ(sq_sum(r65->components), 65);
    EXPECT_GE(r65->components(0), r65->components(1));

    EXPECT_FALSE(two_square_decompose(21));

    const auto r45 = two_square_decompose(45);
    ASSERT_TRUE(r45);
    EXPECT_EQ(r45->components, pair_of<BigInt>(6, 3));
}

TEST(TwoSquareDecompose, ExactUpToTenThousand)
{
    for (long n = 1; n <= 10000; ++n) {
        const auto r = two_square_decompose(n);
        ASSERT_EQ(r.has_value(), brute_two(n)) << n;
        if (!r) continue;
        ASSERT_EQ(sq_sum(r->components), n) << n;
        ASSERT_GE(r->components(0), r->components(1));
        ASSERT_GE(r->components(1), 0);
    }
}

TEST(TwoSquareDecompose, FoldPathIsUsed)
{
    // 65 = 5 * 13 and 1105 = 5 * 13 * 17
    DecomposeTrace t65;
    two_square_decompose(65, &t65);
    EXPECT_EQ(t65.prime_searches, 2u);
    EXPECT_GE(t65.compositions, 1u);

    DecomposeTrace t1105;
    const auto r = two_square_decompose(1105, &t1105);
    EXPECT_EQ(t1105.prime_searches, 3u);
    EXPECT_GE(t1105.compositions, 2u);
    EXPECT_EQ(sq_sum(r->components), 1105);

    // the square part is a multiplier, not a search: 9 * 49 * 5
    DecomposeTrace tsq;
    const auto rsq = two_square_decompose(9 * 49 * 5, &tsq);
    EXPECT_EQ(tsq.prime_searches, 1u);
    EXPECT_EQ(rsq->components, pair_of<BigInt>(42, 21));
}

TEST(TwoSquareDecompose, LargeInput)
{
    const BigInt n = BigInt(1000037) * BigInt(1000033) * 4 * 9;  // 1000037 = 1 mod 4, 1000033 = 1 mod 4
    ASSERT_EQ(BigInt(1000037) % 4, 1);
    ASSERT_EQ(BigInt(1000033) % 4, 1);
    const auto r = two_square_decompose(n);
    ASSERT_TRUE(r);
    EXPECT_EQ(sq_sum(r->components), n);
}

TEST(FourSquareDecompose, Examples)
{
    EXPECT_EQ(four_square_decompose(0).components, quad_of<BigInt>(0, 0, 0, 0));
    EXPECT_EQ(sq_sum(four_square_decompose(7).components), 7);
    EXPECT_EQ(four_square_decompose(7).components, quad_of<BigInt>(2, 1, 1, 1));
    EXPECT_EQ(sq_sum(four_square_decompose(15).components), 15);
    EXPECT_EQ(four_square_decompose(1).components, quad_of<BigInt>(1, 0, 0, 0));
}

TEST(FourSquareDecompose, ExactUpToTenThousand)
{
    for (long n = 0; n <= 10000; ++n) {
        const IntQuad c = four_square_decompose(n).components;
        ASSERT_EQ(sq_sum(c), n) << n;
        for (int k = 0; k < 3; ++k) ASSERT_GE(c(k), c(k + 1)) << n;
        ASSERT_GE(c(3), 0);
    }
}

TEST(FourSquareDecompose, FoldPathIsUsed)
{
    DecomposeTrace t;
    const auto r = four_square_decompose(7 * 11 * 13, &t);
    EXPECT_EQ(t.prime_searches, 3u);
    EXPECT_GE(t.compositions, 2u);
    EXPECT_EQ(sq_sum(r.components), 1001);
}

TEST(PrimeSearch, Examples)
{
    EXPECT_EQ(sq_sum(*two_square_search(13)), 13);
    EXPECT_FALSE(two_square_search(7));
    for (int p : {2, 3, 5, 7, 11, 97, 101}) EXPECT_EQ(sq_sum(four_square_search(p)), p);
}
