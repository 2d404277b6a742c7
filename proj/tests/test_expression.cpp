#include <gtest/gtest.h>

#include <cmath>

#include "sosq/errors.hpp"
#include "sosq/expression.hpp"

using sosq::Expression;
using sosq::ParseError;

TEST(Expression, Literals)
{
    EXPECT_EQ(Expression::parse("0.25")(7.0), 0.25);
    EXPECT_EQ(Expression::parse("1e-3")(0.0), 1e-3);
    EXPECT_EQ(Expression::parse("  3 ")(0.0), 3.0);
    EXPECT_EQ(Expression::constant(0.5)(100.0), 0.5);
}

TEST(Expression, Precedence)
{
    EXPECT_EQ(Expression::parse("1 + 2 * 3")(0), 7.0);
    EXPECT_EQ(Expression::parse("(1 + 2) * 3")(0), 9.0);
    EXPECT_EQ(Expression::parse("8 / 4 / 2")(0), 1.0);
    EXPECT_EQ(Expression::parse("10 - 4 - 3")(0), 3.0);
    EXPECT_EQ(Expression::parse("-x * 2")(3), -6.0);
    EXPECT_EQ(Expression::parse("--x")(3), 3.0);
    EXPECT_EQ(Expression::parse("2 - -x")(3), 5.0);
}

TEST(Expression, Functions)
{
    EXPECT_EQ(Expression::parse("abs(x)")(-4), 4.0);
    EXPECT_EQ(Expression::parse("min(x, 1, 3)")(2), 1.0);
    EXPECT_EQ(Expression::parse("max(x, 1)")(2), 2.0);
    EXPECT_EQ(Expression::parse("pow(x, 2)")(-3), 9.0);
    EXPECT_DOUBLE_EQ(Expression::parse("0.1 * pow(abs(x), 1.5) + max(0, 1 - x)")(4), 0.8);
}

TEST(Expression, Errors)
{
    auto token_of = [](const char* text) {
        try {
            Expression::parse(text);
        } catch (const ParseError& e) {
            return e.token();
        }
        return std::string("<no error>");
    };
    EXPECT_EQ(token_of("sin(x)"), "sin");
    EXPECT_EQ(token_of("1 +"), "<end>");
    EXPECT_EQ(token_of("(x"), "<end>");
    EXPECT_EQ(token_of("x y"), "y");
    EXPECT_EQ(token_of("2 $ 3"), "$");
    EXPECT_EQ(token_of("pow(x)"), "pow");
    EXPECT_EQ(token_of("min(x)"), "min");
    EXPECT_EQ(token_of("y"), "y");
    EXPECT_EQ(token_of(""), "<end>");
}

TEST(Expression, CopiesShareTree)
{
    const Expression e = Expression::parse("x * x + 1");
    const Expression copy = e;
    EXPECT_EQ(copy(3), 10.0);
    EXPECT_EQ(copy.source(), "x * x + 1");
}
