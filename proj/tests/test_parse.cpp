#include "powsolve/errors.hpp"
#include "powsolve/parse.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace powsolve;

TEST(Parse, QuinticText) {
    auto in = parsePolynomial("31*x^5 + 235*x^4 + 710*x^3 + 1070*x^2 + 805*x + 242");
    EXPECT_EQ(in.degree(), 5);
    auto eq = in.toUnivariate();
    EXPECT_EQ(eq.normCoeffs(), (std::vector<Rational>{31, 47, 71, 107, 161, 242}));
}

TEST(Parse, ExpandsProductsAndPowers) {
    auto eq = parsePolynomial("(x+1)^3 - (x-1)^3").toUnivariate();
    EXPECT_EQ(eq.plainCoeffs(), (std::vector<Rational>{6, 0, 2}));
    auto q = parsePolynomial("-(1/2)*x^2 + 3/4").toUnivariate();
    EXPECT_EQ(q.plainCoeffs(), (std::vector<Rational>{Rational(-1, 2), 0, Rational(3, 4)}));
}

TEST(Parse, BinaryAndTernaryForms) {
    auto b = parsePolynomial("x^3 + 3*x*y^2");
    EXPECT_TRUE(b.homogeneous());
    EXPECT_EQ(b.toUnivariate().plainCoeffs(), (std::vector<Rational>{1, 0, 3, 0}));
    auto t = parsePolynomial("x3^3 + x1*x2*x3");
    EXPECT_EQ(t.formVariables(), (std::vector<std::string>{"x1", "x2", "x3"}));
    auto f = t.toForm();
    EXPECT_EQ(f.variables(), 3);
    EXPECT_EQ(f.coefficient({1, 1, 1}), ExactScalar(1L));
    EXPECT_THROW(parsePolynomial("x^3 + x*y").toForm(), Error);
}

TEST(Parse, ErrorsCarryPosition) {
    auto expectError = [](const char* text, int line, int column) {
        try {
            parsePolynomial(text);
            FAIL() << "accepted " << text;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line(), line) << text;
            EXPECT_EQ(e.column(), column) << text;
        }
    };
    expectError("x^", 1, 3);
    expectError("2x", 1, 2);
    expectError("x + ", 1, 5);
    expectError("(x + 1", 1, 7);
    expectError("x^2^3", 1, 4);
    expectError("x +\n  $", 2, 3);
    expectError("x + 1/0*x", 1, 5);
}

TEST(Parse, Coefficients) {
    EXPECT_EQ(parseCoefficients("1, -3/2 0 4").plainCoeffs(), (std::vector<Rational>{1, Rational(-3, 2), 0, 4}));
    EXPECT_THROW(parseCoefficients("1, abc"), ParseError);
    EXPECT_THROW(parseCoefficients("0 1 2"), ParseError);
    EXPECT_THROW(parseCoefficients(""), Error);
}

TEST(Parse, RenderRoundTrip) {
    oracle::Rng rng(401);
    for (int t = 0; t < 50; ++t) {
        std::string text;
        const int terms = static_cast<int>(rng.integer(1, 6));
        for (int k = 0; k < terms; ++k) {
            if (k) text += " + ";
            text += "(" + toString(rng.nonzeroRational(20, 6)) + ")*x^" + std::to_string(rng.integer(0, 5)) + "*y^" +
                    std::to_string(rng.integer(0, 5));
        }
        auto first = parsePolynomial(text);
        auto again = parsePolynomial(render(first.polynomial));
        EXPECT_EQ(first.polynomial, again.polynomial) << text;
        EXPECT_EQ(render(again.polynomial), render(first.polynomial));
    }
}
