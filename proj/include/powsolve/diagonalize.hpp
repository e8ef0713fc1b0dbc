#pragma once

#include "powsolve/center.hpp"
#include "powsolve/form.hpp"
#include "powsolve/matrix.hpp"
#include "powsolve/numeric.hpp"

#include <cstdint>
#include <vector>

namespace powsolve {

enum class SpectrumKind { DistinctRational, Repeated, Irrational, NonCommutative };

const char* toString(SpectrumKind kind);

struct ProfileOptions {
    /// Seeds the pseudorandom generic elements tried after the prime-based ones.
    std::uint64_t seed = 0x5eedULL;
    int maxAttempts = 8;
};

/// What the center algebra looks like through one generic element g = sum r_i B_i.
struct AlgebraProfile {
    std::size_t dim = 0;
    bool commutative = true;
    std::vector<Rational> weights;  ///< the r_i
    RationalMatrix genericElement;
    /// det(tI - g), ascending powers of t.
    std::vector<Rational> charPoly;
    SpectrumKind spectrumKind = SpectrumKind::Repeated;
    /// Distinct rational eigenvalues of g, ascending.
    std::vector<Rational> rationalEigenvalues;
    int attempts = 0;
};

AlgebraProfile profile(const NAryForm& f, const CenterBasis& basis, const ProfileOptions& options = {});

/// f(P y) = sum_i diagonal_i * y_i^d; equivalently f = asPowerSum in the original variables,
/// whose linear forms are the rows of P^-1 (scaled so their first nonzero entry is 1).
struct DiagonalDecomposition {
    RationalMatrix p;
    std::vector<RationalMatrix> idempotents;
    std::vector<Rational> diagonal;
    PowerSumDecomposition asPowerSum;
    AlgebraProfile profile;
};

/// Throws NotDiagonalizable for repeated or non-commutative spectra and IrrationalSpectrum
/// when the generic element does not split over Q.
DiagonalDecomposition diagonalizeForm(const NAryForm& f, const ProfileOptions& options = {});

struct NumericDiagonalDecomposition {
    Matrix<Complex> p;
    std::vector<Matrix<Complex>> idempotents;
    std::vector<Complex> diagonal;
    NumericPowerSum asPowerSum;
    AlgebraProfile profile;
};

/// Same pipeline with the eigenvalues of g taken numerically; handles irrational spectra.
NumericDiagonalDecomposition diagonalizeNumeric(const NAryForm& f, unsigned bits = kDefaultBits,
                                                const ProfileOptions& options = {});

}  // namespace powsolve
