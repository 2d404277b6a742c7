#include <gtest/gtest.h>

#include "sosq/identities.hpp"
#include "sosq/sampling.hpp"

using namespace sosq;

namespace {

IntPair ip(long long x, long long y)
{
    return pair_of<BigInt>(x, y);
}

IntQuad iq(long long x, long long y, long long z, long long w)
{
    return quad_of<BigInt>(x, y, z, w);
}

} // namespace

TEST(ComposeTwo, LeftIdentity)
{
    EXPECT_EQ(compose_two(ip(1, 0), ip(3, 4)), ip(3, 4));
}

TEST(ComposeTwo, RightUnitConjugates)
{
    // (1, 0) is not a right identity under this sign convention.
    EXPECT_EQ(compose_two(ip(3, 4), ip(1, 0)), ip(3, -4));
}

TEST(ComposeTwo, Examples)
{
    const IntPair r = compose_two(ip(1, 2), ip(2, 1));
    EXPECT_EQ(r, ip(4, -3));
    EXPECT_EQ(norm2(r), BigInt(25));
    EXPECT_EQ(norm2(r), norm2(ip(1, 2)) * norm2(ip(2, 1)));

    const IntPair s = compose_two(ip(1, 1), ip(1, 1));
    EXPECT_EQ(s, ip(2, 0));
    EXPECT_EQ(norm2(s), BigInt(4));
}

TEST(ComposeFour, Examples)
{
    EXPECT_EQ(compose_four(iq(1, 0, 0, 0), iq(2, 3, 5, 7)), iq(2, 3, 5, 7));
    EXPECT_EQ(compose_four(iq(1, 1, 1, 1), iq(1, 1, 1, 1)), iq(4, 0, 0, 0));
    EXPECT_EQ(compose_four(iq(0, 1, 0, 0), iq(0, 1, 0, 0)), iq(1, 0, 0, 0));
}

TEST(Norms, Examples)
{
    EXPECT_EQ(norm2(ip(0, 0)), BigInt(0));
    EXPECT_EQ(norm2(ip(3, 4)), BigInt(25));
    EXPECT_EQ(norm4(iq(1, 1, 1, 1)), BigInt(4));
}

TEST(ComposeTwo, NormLawRandom)
{
    const auto s = integer_sampler<BigInt>(-1000, 1000, 20000, 11);
    for (std::size_t i = 0; i < s.count; ++i) {
        const Quad<BigInt> t = s.tuple<4>(i);
        const IntPair p1 = t.head<2>();
        const IntPair p2 = t.tail<2>();
        ASSERT_EQ(norm2(compose_two(p1, p2)), norm2(p1) * norm2(p2)) << "sample " << i;
    }
}

TEST(ComposeFour, NormLawRandom)
{
    const auto s = integer_sampler<BigInt>(-1000, 1000, 20000, 12);
    for (std::size_t i = 0; i < s.count; ++i) {
        const Eigen::Matrix<BigInt, 8, 1> t = s.tuple<8>(i);
        const IntQuad q1 = t.head<4>();
        const IntQuad q2 = t.tail<4>();
        ASSERT_EQ(norm4(compose_four(q1, q2)), norm4(q1) * norm4(q2)) << "sample " << i;
    }
}

TEST(ComposeFour, MatchesTextbookExpansion)
{
    // Term-by-term expansion in the listed order, independent of the grouping
    // used by compose_four.
    const auto s = integer_sampler<long long>(-50, 50, 2000, 13);
    for (std::size_t i = 0; i < s.count; ++i) {
        const auto t = s.tuple<8>(i);
        const long long x1 = t(0), y1 = t(1), z1 = t(2), w1 = t(3);
        const long long x2 = t(4), y2 = t(5), z2 = t(6), w2 = t(7);
        const Quad<long long> expected = quad_of<long long>(x1 * x2 + y1 * y2 + z1 * z2 + w1 * w2,
                                                              x1 * y2 - y1 * x2 + z1 * w2 - w1 * z2,
                                                              x1 * z2 - y1 * w2 - z1 * x2 + w1 * y2,
                                                              x1 * w2 + y1 * z2 - z1 * y2 - w1 * x2);
        ASSERT_EQ(compose_four<long long>(t.head<4>(), t.tail<4>()), expected);
    }
}

TEST(ComposeFour, DiagonalGivesExactZerosInDoubles)
{
    const auto s = box_sampler(-10, 10, 5000, 14);
    for (std::size_t i = 0; i < s.count; ++i) {
        const RealVec4 q = s.tuple<4>(i);
        const RealVec4 r = compose_four(q, q);
        ASSERT_EQ(r(0), norm4(q));
        ASSERT_EQ(r(1), 0.0);
        ASSERT_EQ(r(2), 0.0);
        ASSERT_EQ(r(3), 0.0);
        const RealVec2 p = q.head<2>();
        const RealVec2 rp = compose_two(p, p);
        ASSERT_EQ(rp(0), norm2(p));
        ASSERT_EQ(rp(1), 0.0);
    }
}

TEST(ComposeTwo, LargeOperandsStayExact)
{
    const BigInt big = BigInt(1) << 200;
    const IntPair p1 = pair_of<BigInt>(big + 3, -big);
    const IntPair p2 = pair_of<BigInt>(big - 7, big * 5);
    EXPECT_EQ(norm2(compose_two(p1, p2)), norm2(p1) * norm2(p2));
}
