#include "powsolve/errors.hpp"
#include "powsolve/radical.hpp"
#include "powsolve/verify.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace powsolve;

namespace {

std::vector<oracle::cplx> rationalsAsComplex(const std::vector<Rational>& rs) {
    std::vector<oracle::cplx> out;
    for (const auto& r : rs) out.emplace_back(r.get_d(), 0.0);
    return out;
}

}  // namespace

TEST(Oracle, TripleZero) {
    auto set = oracleRoots(UnivariateEquation::fromPlainCoeffs({1, 0, 0, 0}));
    EXPECT_TRUE(set.converged);
    ASSERT_EQ(set.roots.size(), 1U);
    EXPECT_EQ(set.roots[0].multiplicity, 3);
    EXPECT_EQ(std::abs(oracle::toStd(set.roots[0].value)), 0.0);
}

TEST(Oracle, PlantedIntegers) {
    auto set = oracleRoots(fromRoots({1, 2, 3}));
    EXPECT_EQ(set.totalMultiplicity(), 3);
    EXPECT_LT(oracle::matchDistance(oracle::toStd(set.values()), {1.0, 2.0, 3.0}), 1e-15);
}

TEST(Oracle, PlantedRandomRoots) {
    oracle::Rng rng(301);
    for (int t = 0; t < 40; ++t) {
        const int d = static_cast<int>(rng.integer(2, 10));
        std::vector<Rational> roots;
        for (int i = 0; i < d; ++i) roots.push_back(rng.rational(20, 5));
        auto eq = fromRoots(roots);
        auto set = oracleRoots(eq, 128);
        EXPECT_EQ(set.totalMultiplicity(), d);
        EXPECT_LT(oracle::matchDistance(oracle::toStd(set.values()), rationalsAsComplex(roots)), 1e-6);
        // independent check: the polynomial is small at every oracle root
        for (const auto& z : set.values()) {
            auto value = oracle::evaluate(eq.plainCoeffs(), oracle::toStd(z));
            EXPECT_LT(std::abs(value), 1e-6 * (1 + std::pow(std::abs(oracle::toStd(z)), d)) * 1e3);
        }
    }
}

TEST(Oracle, Deterministic) {
    auto eq = UnivariateEquation::fromPlainCoeffs({3, -1, 4, 1, -5, 9});
    auto a = oracleRoots(eq, 96), b = oracleRoots(eq, 96);
    ASSERT_EQ(a.raw.size(), b.raw.size());
    for (std::size_t i = 0; i < a.raw.size(); ++i) {
        EXPECT_EQ(oracle::toStd(a.raw[i]), oracle::toStd(b.raw[i]));
    }
    EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Oracle, PrecisionSelfConsistency) {
    auto eq = UnivariateEquation::fromPlainCoeffs({1, -3, 7, 2, -11, 5, 1});
    auto lo = oracleRoots(eq, 64), hi = oracleRoots(eq, 256);
    EXPECT_TRUE(compareRootSets(lo.values(), hi.values(), 1e-12).passed);
    EXPECT_GE(oracleBits(7), 64U + 32U * 7U);
}

TEST(Oracle, RationalRoots) {
    auto eq = fromRoots({Rational(1, 2), Rational(1, 2), -3, Rational(7, 5)});
    EXPECT_EQ(rationalRoots(eq), (std::vector<Rational>{-3, Rational(1, 2), Rational(7, 5)}));
    EXPECT_TRUE(rationalRoots(UnivariateEquation::fromPlainCoeffs({1, 0, -2})).empty());
}

TEST(Compare, NegativeControl) {
    const unsigned bits = 64;
    std::vector<Complex> a{Complex(Rational(1), bits), Complex(Rational(2), bits)};
    std::vector<Complex> b{Complex(Rational(2), bits), Complex(Rational(1), bits)};
    EXPECT_TRUE(compareRootSets(a, b, 1e-12).passed);
    std::vector<Complex> c{Complex(Rational(1), bits), Complex(Rational(2) + Rational(1, 1000), bits)};
    auto off = compareRootSets(a, c, 1e-6);
    EXPECT_FALSE(off.passed);
    EXPECT_NEAR(off.maxDistance, 1e-3, 1e-12);
    std::vector<Complex> shortList{Complex(Rational(1), bits)};
    auto structural = compareRootSets(a, shortList, 1e-6);
    EXPECT_FALSE(structural.passed);
    EXPECT_TRUE(structural.structuralFailure);
}

TEST(Compare, WrongRootSetDetected) {
    auto eq = fromRoots({1, 2, 3});
    auto rs = solveByRadicals(fromRoots({1, 2, 4}));
    EXPECT_FALSE(compareRootSets(rs, oracleRoots(eq), 1e-6).passed);
    EXPECT_GT(maxNormalizedResidual(eq, rs), 1e-3);
}

TEST(Residual, Vieta) {
    auto eq = fromRoots({1, 2, 3});
    auto rs = solveByRadicals(eq);
    auto v = vietaDeviation(eq, rs);
    EXPECT_LT(v.sum, 1e-15);
    EXPECT_LT(v.product, 1e-15);
    std::vector<Complex> wrong{Complex(Rational(1), 64), Complex(Rational(2), 64), Complex(Rational(4), 64)};
    EXPECT_GT(vietaDeviation(eq, wrong).sum, 0.1);
}

TEST(Residual, Normalized) {
    auto eq = UnivariateEquation::fromPlainCoeffs({2, 0, -4});
    EXPECT_EQ(normalizedResidual(eq, Complex(Rational(0), 64)), 1.0);
    EXPECT_EQ(normalizedResidual(eq, Complex(Rational(1), 64)), 0.5);
}

TEST(CheckDecomposition, ExactAndNumeric) {
    auto f = NAryForm::fromBinary(BinaryForm({2, 0, 2, 0}));
    auto dec = completeCube(BinaryForm({2, 0, 2, 0}));
    EXPECT_TRUE(checkDecomposition(f, dec));
    dec.summands[0].coefficient = ExactScalar(2L);
    EXPECT_FALSE(checkDecomposition(f, dec));
}
