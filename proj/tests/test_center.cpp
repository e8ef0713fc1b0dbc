#include "powsolve/center.hpp"
#include "powsolve/errors.hpp"
#include "powsolve/parse.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace powsolve;

namespace {

RationalMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

NAryForm sumOfPowers(int n, int d) {
    NAryForm f(n, d);
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = d;
        f.add(e, ExactScalar(1L));
    }
    return f;
}

NAryForm ternaryCubic() {
    return parsePolynomial("(x1 + x2 + x3)^3 - 2*(x2 - 2*x3)^3 + 3*x3^3").toForm();
}

bool containsIdentity(const CenterBasis& b) {
    auto with = b.basis;
    with.push_back(identityMatrix(static_cast<std::size_t>(b.n)));
    return spanRank(with) == b.dim();
}

/// Random planted f = sum_i lambda_i (row_i of A . x)^d with A invertible.
NAryForm plantedDiagonalizable(oracle::Rng& rng, int n, int d) {
    for (;;) {
        RationalMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rng.integer(-3, 3);
        if (determinant(a) == 0) continue;
        PowerSumDecomposition dec;
        dec.degree = d;
        for (int i = 0; i < n; ++i) {
            LinearForm l;
            for (int j = 0; j < n; ++j) l.coefficients.emplace_back(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            dec.summands.push_back({ExactScalar(rng.nonzeroRational(9, 2)), l});
        }
        return expand(dec, n);
    }
}

}  // namespace

TEST(Center, SumOfPowersIsDiagonal) {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 3; d <= 5; ++d) {
            auto b = computeCenter(sumOfPowers(n, d));
            EXPECT_EQ(b.dim(), static_cast<std::size_t>(n));
            std::vector<RationalMatrix> units;
            for (int i = 0; i < n; ++i) {
                RationalMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
                e(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
                units.push_back(e);
            }
            EXPECT_TRUE(sameSpan(b.basis, units));
            EXPECT_TRUE(b.commutative);
        }
    }
}

TEST(Center, TernaryCubicBasis) {
    auto b = computeCenter(ternaryCubic());
    EXPECT_EQ(b.dim(), 3U);
    std::vector<RationalMatrix> expected{M({{1, 1, 1}, {0, 0, 0}, {0, 0, 0}}), M({{0, -1, 2}, {0, 1, -2}, {0, 0, 0}}),
                                      M({{0, 0, -3}, {0, 0, 2}, {0, 0, 1}})};
    EXPECT_TRUE(sameSpan(b.basis, expected));
    EXPECT_TRUE(b.commutative);
    for (const auto& x : expected) EXPECT_TRUE(inCenter(ternaryCubic(), x));
}

TEST(Center, PerfectCubeHasLargeNonCommutativeCenter) {
    auto f = NAryForm::fromBinary(BinaryForm({1, 1, 1, 1}));
    auto b = computeCenter(f);
    EXPECT_EQ(b.dim(), 3U);
    EXPECT_FALSE(b.commutative);
    EXPECT_FALSE(isNondegenerate(f));
}

TEST(Center, RejectsLowDegree) {
    NAryForm q(2, 2);
    q.add({1, 1}, ExactScalar(1L));
    EXPECT_THROW(computeCenter(q), DegreeError);
}

TEST(Center, BinarySystemRows) {
    BinaryForm f({2, 3, 5, 7});
    auto s = binaryCenterSystem(f);
    EXPECT_EQ(s, M({{2, 3, -5}, {3, 5, -7}}));
    auto q = binaryCenterSystem(BinaryForm({31, 47, 71, 107, 161, 242}));
    EXPECT_EQ(q.rows(), 4U);
    EXPECT_EQ(rank(q), 2U);
    EXPECT_EQ(rank(binaryCenterSystem(BinaryForm({4, 4, 4, 4, 4}))), 1U);
}

TEST(Center, QuinticGenerator) {
    auto g = centerGenerator(BinaryForm({31, 47, 71, 107, 161, 242}));
    EXPECT_EQ(g.d1, -8);
    EXPECT_EQ(g.d2, -20);
    EXPECT_EQ(g.d3, -12);
    EXPECT_EQ(g.lambda1, ExactScalar(-8L));
    EXPECT_EQ(g.lambda2, ExactScalar(-12L));
    EXPECT_EQ(g.lambda, M({{0, 12}, {-8, -20}}));
}

TEST(Center, DegreeSevenGenerator) {
    auto eq = parsePolynomial("x^7 - 8/3*x^6 + 11/4*x^5 - 5/4*x^4 + 5/48*x^3 + 1/8*x^2 - 3/64*x + 1/192").toUnivariate();
    auto g = centerGenerator(BinaryForm::homogenize(eq));
    EXPECT_EQ(g.d1, Rational(-25, 1764));
    EXPECT_EQ(g.d2, Rational(25, 1764));
    EXPECT_EQ(g.d3, Rational(-25, 7056));
    EXPECT_EQ(g.discriminant, 0);
    EXPECT_EQ(g.lambda1, ExactScalar(Rational(25, 3528)));
    EXPECT_EQ(g.lambda2, ExactScalar(Rational(25, 3528)));
}

TEST(Center, DepressedCubicGenerator) {
    oracle::Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        Rational p = rng.nonzeroRational(20, 5);
        Rational q = rng.rational(20, 5);
        auto eq = UnivariateEquation::fromPlainCoeffs({1, 0, p, q});
        auto g = centerGenerator(BinaryForm::homogenize(eq));
        EXPECT_EQ(g.d1, p / 3);
        EXPECT_EQ(g.d2, q);
        EXPECT_EQ(g.d3, -p * p / 9);
    }
}

TEST(Center, GeneratorErrors) {
    EXPECT_THROW(centerGenerator(BinaryForm({1, 0, 0, 1})), PivotError);
    try {
        centerGenerator(BinaryForm({1, 1, 1, 1}));
        FAIL() << "perfect cube accepted";
    } catch (const CenterRankError& e) {
        EXPECT_EQ(e.rank(), 1);
    }
    // generic quintic: rank 3
    try {
        centerGenerator(BinaryForm({1, 0, 0, 1, 0, 3}));
        FAIL() << "rank-3 system accepted";
    } catch (const CenterRankError& e) {
        EXPECT_EQ(e.rank(), 3);
    }
}

TEST(Center, GeneratorEigenvalueIdentities) {
    oracle::Rng rng(37);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 60; ++t) {
        std::vector<Rational> a;
        for (int i = 0; i < 4; ++i) a.push_back(rng.rational(9, 3));
        BinaryForm f(a);
        CenterGenerator g;
        try {
            g = centerGenerator(f);
        } catch (const Error&) {
            continue;
        }
        ++checked;
        EXPECT_EQ(g.lambda1 + g.lambda2, ExactScalar(g.d2));
        EXPECT_EQ(g.lambda1 * g.lambda2, ExactScalar(g.d1 * g.d3));
        EXPECT_EQ(trace(g.lambda), g.d2);
        EXPECT_EQ(determinant(g.lambda), g.d1 * g.d3);
        // binary consistency: span{I, Lambda} is the computed center
        auto b = computeCenter(NAryForm::fromBinary(f));
        EXPECT_TRUE(sameSpan(b.basis, {identityMatrix(2), g.lambda}));
    }
    EXPECT_GE(checked, 40);
}

TEST(Center, MembershipByPointEvaluation) {
    oracle::Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        int n = static_cast<int>(rng.integer(2, 4));
        int d = static_cast<int>(rng.integer(3, 4));
        NAryForm f = plantedDiagonalizable(rng, n, d);
        auto b = computeCenter(f);
        EXPECT_EQ(b.dim(), static_cast<std::size_t>(n));
        EXPECT_TRUE(containsIdentity(b));
        EXPECT_TRUE(b.commutative);
        EXPECT_TRUE(isNondegenerate(f));
        for (const auto& x : b.basis) {
            EXPECT_TRUE(inCenter(f, x));
            EXPECT_TRUE(oracle::centerMemberByEvaluation(f, x, rng));
        }
    }
}

TEST(Center, NonMemberRejected) {
    auto f = ternaryCubic();
    RationalMatrix x(3, 3);
    x(0, 1) = 1;
    EXPECT_FALSE(inCenter(f, x));
    oracle::Rng rng(43);
    EXPECT_FALSE(oracle::centerMemberByEvaluation(f, x, rng));
}

TEST(Center, ConjugationCovariance) {
    oracle::Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(rng.integer(2, 3));
        NAryForm f = plantedDiagonalizable(rng, n, 3);
        auto zf = computeCenter(f);
        for (int k = 0; k < 5; ++k) {
            RationalMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            do {
                for (std::size_t i = 0; i < p.rows(); ++i)
                    for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = rng.integer(-4, 4);
            } while (determinant(p) == 0);
            auto zg = computeCenter(substitute(f, p));
            auto pinv = inverse(p);
            std::vector<RationalMatrix> conj;
            for (const auto& x : zf.basis) conj.push_back(pinv * x * p);
            EXPECT_TRUE(sameSpan(zg.basis, conj));
        }
    }
}
