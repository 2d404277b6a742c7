#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "sosq/sampling.hpp"
#include "sosq/systems.hpp"

using namespace sosq;

namespace {

// Independent substitution oracles.
double two_defect(double x, double y, double u, double v)
{
    return std::max(std::abs(2 * x * y - u), std::abs(x * x - y * y - v)) / (1 + std::abs(u) + std::abs(v));
}

double four_defect(const RealVec4& s, double a, double b, double c, double d)
{
    const double x = s(0), y = s(1), z = s(2), w = s(3);
    const double e[4] = {(x + z) * (y + w) - a, 2 * x * z - y * y - w * w - b, (x + z) * (w - y) - c,
                         x * x - z * z - d};
    double m = 0;
    for (double v : e) m = std::max(m, std::abs(v));
    return m / (1 + std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d));
}

} // namespace

TEST(SolveTwo, AxisCases)
{
    const auto r1 = solve_two(0.0, 4.0);
    EXPECT_EQ(r1.case_label, TwoCase::U0_VPOS);
    EXPECT_DOUBLE_EQ(r1.solution(0), 2.0);
    EXPECT_DOUBLE_EQ(r1.solution(1), 0.0);

    const auto r2 = solve_two(0.0, -9.0);
    EXPECT_EQ(r2.case_label, TwoCase::U0_VNEG);
    EXPECT_DOUBLE_EQ(r2.solution(0), 0.0);
    EXPECT_DOUBLE_EQ(r2.solution(1), 3.0);
}

TEST(SolveTwo, GeneralCase)
{
    const auto r = solve_two(2.0, 0.0);
    EXPECT_EQ(r.case_label, TwoCase::UNZ);
    EXPECT_NEAR(r.solution(0), 1.0, 1e-15);
    EXPECT_NEAR(r.solution(1), 1.0, 1e-15);
    EXPECT_LE(two_defect(r.solution(0), r.solution(1), 2.0, 0.0), 1e-15);
}

TEST(SolveTwo, CanonicalBranchKeepsXNonnegative)
{
    for (double v : {5.0, -5.0, -1e6}) {
        const auto r = solve_two(-3.0, v);
        EXPECT_GT(r.solution(0), 0.0) << v;
        EXPECT_LT(r.solution(1), 0.0) << v;
    }
}

TEST(SolveTwo, CancellationGuard)
{
    // v << 0 with tiny u: the naive (v + s) / 2 is zero in doubles.
    const double u = 1e-9, v = -1e6;
    const auto r = solve_two(u, v);
    EXPECT_LE(two_defect(r.solution(0), r.solution(1), u, v), 1e-15);
    EXPECT_GT(r.solution(0), 0.0);
    EXPECT_NEAR(r.solution(0), u / (2 * std::sqrt(-v)), 1e-25);
}

TEST(SolveTwo, RejectsNonFinite)
{
    EXPECT_THROW(solve_two(std::numeric_limits<double>::quiet_NaN(), 1.0), NonFiniteInput);
    EXPECT_THROW(solve_two(1.0, std::numeric_limits<double>::infinity()), NonFiniteInput);
}

TEST(SolveTwo, ZeroEpsilonKnob)
{
    const auto r = solve_two(1e-20, 4.0, SolveOptions<double>{1e-9, 1e-12});
    EXPECT_EQ(r.case_label, TwoCase::U0_VPOS);
    EXPECT_EQ(solve_two(1e-20, 4.0).case_label, TwoCase::UNZ);
}

TEST(SolveTwo, RoundTripRandom)
{
    const auto s = box_sampler(-100, 100, 10000, 21);
    for (std::size_t i = 0; i < s.count; ++i) {
        const RealVec2 t = s.tuple<2>(i);
        const auto r = solve_two(t(0), t(1));
        ASSERT_LE(two_defect(r.solution(0), r.solution(1), t(0), t(1)), 1e-9);
        const double norm = r.solution.squaredNorm();
        ASSERT_LE(std::abs(norm - std::hypot(t(0), t(1))) / (1 + t.cwiseAbs().sum()), 1e-9);
    }
}

TEST(SolveTwo, SignVariants)
{
    const auto v = sign_variants_two(2.0, 0.0);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0], solve_two(2.0, 0.0).solution);
    EXPECT_NEAR(v[1](0), -1.0, 1e-15);
    EXPECT_NEAR(v[1](1), -1.0, 1e-15);

    // zero component: flipping it is not a new solution
    EXPECT_EQ(sign_variants_two(0.0, 4.0).size(), 2u);
}

TEST(SolveFour, CaseA)
{
    const auto r = solve_four(0.0, -2.0, 0.0, 0.0);
    EXPECT_EQ(r.case_label, FourCase::A);
    EXPECT_EQ(r.solution, RealVec4(0, 1, 0, 1));
}

TEST(SolveFour, ZeroSystem)
{
    const auto r = solve_four(0.0, 0.0, 0.0, 0.0);
    EXPECT_EQ(r.case_label, FourCase::A);
    EXPECT_EQ(r.solution, RealVec4::Zero());
}

TEST(SolveFour, CaseB)
{
    const auto r = solve_four(4.0, 0.0, 0.0, 0.0);
    // b = 0 is not > 0, so the construction runs under the case-C label
    EXPECT_EQ(r.case_label, FourCase::C);
    EXPECT_NEAR(r.alpha, 1.0, 1e-15);
    EXPECT_LE((r.solution - RealVec4(1, 1, 1, 1)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE(four_defect(r.solution, 4, 0, 0, 0), 1e-15);

    const auto rb = solve_four(1.0, 3.0, -2.0, 0.0);
    EXPECT_EQ(rb.case_label, FourCase::B);
    EXPECT_DOUBLE_EQ(rb.solution(0), rb.solution(2));
    EXPECT_LE(four_defect(rb.solution, 1, 3, -2, 0), 1e-14);

    // b > 0 with a = c = 0
    const auto rb0 = solve_four(0.0, 8.0, 0.0, 0.0);
    EXPECT_EQ(rb0.case_label, FourCase::B);
    EXPECT_LE((rb0.solution - RealVec4(2, 0, 2, 0)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SolveFour, CaseC)
{
    for (const RealVec4& rhs : {RealVec4(0, -3, 2, 0), RealVec4(5, -1, 0, 0), RealVec4(1, -7, -4, 0),
                                RealVec4(1e-6, -100, 1e-6, 0)}) {
        const auto r = solve_four(rhs(0), rhs(1), rhs(2), rhs(3));
        EXPECT_EQ(r.case_label, FourCase::C);
        EXPECT_GT(r.alpha, 0.0);
        EXPECT_LE(four_defect(r.solution, rhs(0), rhs(1), rhs(2), rhs(3)), 1e-12) << rhs.transpose();
    }
}

TEST(SolveFour, CaseD)
{
    const auto r = solve_four(0.0, 0.0, 0.0, 1.0);
    EXPECT_EQ(r.case_label, FourCase::D);
    EXPECT_EQ(r.alpha, 0.0);
    EXPECT_LE((r.solution - RealVec4(1, 0, 0, 0)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SolveFour, CaseDUsesNegativeBranchWhenNeeded)
{
    // Larger root of q is extraneous for z = +sqrt(alpha) here.
    const double a = -3.0, b = -3.0, c = 0.0, d = 2.0;
    const auto r = solve_four(a, b, c, d);
    EXPECT_EQ(r.case_label, FourCase::D);
    EXPECT_LE(four_defect(r.solution, a, b, c, d), 1e-12);
    EXPECT_NEAR(case_d_quadratic(a, b, c, d, r.alpha), 0.0, 1e-9 * (1 + a * a + b * b + c * c + d * d));

    // Build the z = +sqrt(alpha) candidate by hand and confirm it is not a solution.
    const double x = std::sqrt(d + r.alpha), z = std::sqrt(r.alpha);
    const RealVec4 plus(x, (a - c) / (2 * (x + z)), z, (a + c) / (2 * (x + z)));
    EXPECT_GT(four_defect(plus, a, b, c, d), 1e-3);
    EXPECT_TRUE(r.negative_z);
}

TEST(SolveFour, RejectsNonFinite)
{
    EXPECT_THROW(solve_four(0.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0), NonFiniteInput);
}

TEST(SolveFour, RoundTripRandomAndAdmissibility)
{
    const auto s = box_sampler(-100, 100, 10000, 22);
    for (std::size_t i = 0; i < s.count; ++i) {
        const RealVec4 t = s.tuple<4>(i);
        const auto r = solve_four(t(0), t(1), t(2), t(3));
        ASSERT_LE(four_defect(r.solution, t(0), t(1), t(2), t(3)), 1e-6) << t.transpose();
        const double rhs_norm = t.norm();
        ASSERT_LE(std::abs(r.solution.squaredNorm() - rhs_norm) / (1 + t.cwiseAbs().sum()), 1e-6);
        ASSERT_EQ(r.case_label, FourCase::D);
        ASSERT_GE(r.alpha, 0.0);
        ASSERT_GE(r.alpha, -t(3));
    }
}

TEST(SolveFour, SignVariantsAllSolve)
{
    const auto v = sign_variants_four(0.0, -2.0, 0.0, 0.0);
    // (0, +-1, 0, +-1): four distinct solutions
    EXPECT_EQ(v.size(), 4u);
    for (const auto& s : v) EXPECT_LE(four_defect(s, 0, -2, 0, 0), 1e-15);

    const auto w = sign_variants_four(3.0, 1.0, -2.0, 4.0);
    std::set<std::vector<double>> seen;
    for (const auto& s : w) {
        EXPECT_LE(four_defect(s, 3, 1, -2, 4), 1e-6);
        seen.insert({s(0), s(1), s(2), s(3)});
    }
    EXPECT_EQ(seen.size(), w.size());
    EXPECT_GE(w.size(), 2u); // the global flip always works
}

TEST(SolveFour, LongDouble)
{
    const auto r = solve_four<long double>(1.5L, -2.0L, 0.25L, -3.0L);
    EXPECT_EQ(r.case_label, FourCase::D);
    EXPECT_LE(r.residual, 1e-15L);
}
