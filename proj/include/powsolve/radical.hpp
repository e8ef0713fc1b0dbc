#pragma once

#include "powsolve/center.hpp"
#include "powsolve/equation.hpp"
#include "powsolve/exact_scalar.hpp"
#include "powsolve/form.hpp"
#include "powsolve/root_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace powsolve {

/// (d-1) x 3 matrix with rows (a_i, a_{i+1}, a_{i+2}).
struct HankelMatrix {
    RationalMatrix entries;
    int rank = 0;
};

HankelMatrix hankel(const UnivariateEquation& eq);

enum class EquationClassTag {
    PerfectPower,                 ///< f = a0 (x + t)^d
    PowerPlusConstant,            ///< f = a0 (x + t)^d + gamma
    ConstantTimesPowerPlusPower,  ///< f = gamma x^d + a_d (u x + 1)^d
    SumOfTwoPowers,               ///< Z(F) = C x C
    LinearTimesPowerD1,           ///< Z(F) = C[e]/(e^2)
    NoNontrivialCenter,
};

const char* toString(EquationClassTag tag);

struct EquationClass {
    EquationClassTag tag = EquationClassTag::NoNontrivialCenter;
    int hankelRank = 0;
    CenterInvariants invariants;
    /// tr^2 - 4 det of a non-scalar center element; set when the Hankel rank is 2.
    std::optional<Rational> centerDiscriminant;

    /// Witnesses for the ratio-test classes (see the tag comments).
    Rational leading = 0;
    Rational shift = 0;
    Rational scale = 0;
    Rational gamma = 0;

    /// LinearTimesPowerD1: f = a0 (x - repeatedRoot)^(d-1) (x - simpleRoot).
    std::optional<Rational> repeatedRoot;
    std::optional<Rational> simpleRoot;

    std::string describe() const;
};

/// Total classification of an equation of degree >= 3.
EquationClass classify(const UnivariateEquation& eq);

/// F = c1 (x + lambda1/D1 y)^3 + c2 (x + lambda2/D1 y)^3, exact over Q(sqrt(Delta)).
/// Throws RepeatedEigenvalue when D2^2 - 4 D1 D3 = 0. When D1 = 0 the linear forms come from
/// the eigenvectors of a basis-free center generator instead of Lambda.
PowerSumDecomposition completeCube(const BinaryForm& form);

/// Degree-d version; also throws CenterRankError when the Hankel rank is not 2.
PowerSumDecomposition completePowers(const BinaryForm& form);

/// The data the two-powers root formula is evaluated from.
struct TwoPowerData {
    int degree = 0;
    CenterGenerator generator;
    Rational a0, a1;
    /// (lambda2 a0 - D1 a1) / (lambda1 a0 - D1 a1)
    ExactScalar radicand;
    /// Principal d-th root of radicand when it is rational.
    std::optional<Rational> exactDelta;
};

TwoPowerData twoPowerData(const UnivariateEquation& eq);

struct SolveOptions {
    unsigned bits = kDefaultBits;
    /// Use delta * zeta^branchShift in place of the principal d-th root.
    long branchShift = 0;
};

/// Roots x_i = (delta zeta^i lambda1 - lambda2) / (D1 (1 - delta zeta^i)), i = 0..d-1.
std::vector<RadicalRoot> twoPowerRoots(const TwoPowerData& data, const SolveOptions& options = {});

struct RadicalSolution {
    RootSet roots;
    /// Class of the equation left after factoring out x^k.
    std::optional<EquationClass> cls;
    std::optional<TwoPowerData> twoPowers;
};

RadicalSolution solveDetailed(const UnivariateEquation& eq, const SolveOptions& options = {});

/// Throws NoRadicalMethod when the center is trivial and PivotError when no transform
/// restores D1 != 0.
RootSet solveByRadicals(const UnivariateEquation& eq, const SolveOptions& options = {});

/// Roots of x^3 + p x + q.
RootSet cardano(const Rational& p, const Rational& q, unsigned bits = kDefaultBits);

/// g(y) = y^4 + p y^2 + q y + r with x = y - shift.
struct DepressedQuartic {
    Rational p, q, r;
    Rational shift;
};

DepressedQuartic depressQuartic(const UnivariateEquation& eq);

/// (p - 2 alpha) y^2 + q y + (r - alpha^2) = (beta y + gamma)^2.
struct ResolventData {
    std::optional<Rational> alphaExact;
    Complex alpha;
    Complex beta;
    Complex gamma;
    /// i*beta and i*gamma, exact when alpha is rational. The depressed quartic factors as
    /// (y^2 + B y + alpha + C)(y^2 - B y + alpha - C).
    std::optional<ExactScalar> factorB;
    std::optional<ExactScalar> factorC;
};

/// 8 alpha^3 - 4 p alpha^2 - 8 r alpha + (4 p r - q^2), leading coefficient first.
std::vector<Rational> resolventCubic(const DepressedQuartic& g);

ResolventData solveResolvent(const DepressedQuartic& g, unsigned bits = kDefaultBits);

RootSet solveQuarticByTwoSquares(const UnivariateEquation& eq, unsigned bits = kDefaultBits);

struct ReversalResult {
    UnivariateEquation equation;
    /// x^k factored out before reversing.
    int zeroRoots = 0;
};

ReversalResult reversalTransform(const UnivariateEquation& eq);

}  // namespace powsolve
