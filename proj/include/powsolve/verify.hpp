#pragma once

#include "powsolve/equation.hpp"
#include "powsolve/form.hpp"
#include "powsolve/numeric.hpp"
#include "powsolve/root_set.hpp"

#include <string>
#include <vector>

namespace powsolve {

struct OracleOptions {
    unsigned bits = kDefaultBits;
    int maxIterations = 500;
    /// Roots closer than this are merged into one root with multiplicity.
    double clusterTolerance = 1e-6;
};

struct OracleRoot {
    Complex value;
    int multiplicity = 1;
};

struct OracleRootSet {
    /// One entry per root, before clustering.
    std::vector<Complex> raw;
    std::vector<OracleRoot> roots;
    int iterations = 0;
    bool converged = false;
    unsigned bits = kDefaultBits;

    int totalMultiplicity() const;
    std::vector<Complex> values() const;
};

/// Aberth-Ehrlich simultaneous iteration from a deterministic circle of starting points,
/// followed by Newton polishing and clustering. Throws NonConvergence when the iteration
/// budget runs out.
OracleRootSet numericRoots(const UnivariateEquation& eq, const OracleOptions& options = {});

/// Mantissa size the oracle needs so that a root of multiplicity up to d still clusters
/// inside 1e-6: the spread of an m-fold root is about (2^-bits)^(1/m).
unsigned oracleBits(int degree, unsigned requested = kDefaultBits);

/// numericRoots at oracleBits(d, bits).
OracleRootSet oracleRoots(const UnivariateEquation& eq, unsigned bits = kDefaultBits);

/// Distinct rational roots of eq, each confirmed by exact evaluation.
std::vector<Rational> rationalRoots(const UnivariateEquation& eq);

struct RootComparison {
    bool passed = false;
    /// Different total multiplicities; no matching was attempted.
    bool structuralFailure = false;
    double maxDistance = 0;
    /// Index (into the first multiset) of the worst matched pair, -1 if none.
    int worstIndex = -1;
    std::string message;
};

/// Greedy nearest-neighbour matching followed by pairwise swap improvement.
RootComparison compareRootSets(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol);
RootComparison compareRootSets(const RootSet& a, const OracleRootSet& b, double tol);

/// |f(x)| / (max|b_i| * max(1, |x|)^d).
double normalizedResidual(const UnivariateEquation& eq, const Complex& x);
double maxNormalizedResidual(const UnivariateEquation& eq, const RootSet& roots);

struct VietaDeviation {
    /// |sum - (-b1/b0)| / max(1, sum |x_i|)
    double sum = 0;
    /// |prod - (-1)^d b_d/b0| / max(1, prod |x_i|)
    double product = 0;
};

VietaDeviation vietaDeviation(const UnivariateEquation& eq, const std::vector<Complex>& roots);
inline VietaDeviation vietaDeviation(const UnivariateEquation& eq, const RootSet& roots) {
    return vietaDeviation(eq, roots.values());
}

/// Exact: expand(dec) == f.
bool checkDecomposition(const NAryForm& f, const PowerSumDecomposition& dec);
/// Numeric: every coefficient within relTol * max |coefficient of f|.
bool checkDecomposition(const NAryForm& f, const NumericPowerSum& dec, double relTol = 1e-9, unsigned bits = kDefaultBits);

}  // namespace powsolve
