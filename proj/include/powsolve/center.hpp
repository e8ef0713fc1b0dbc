#pragma once

#include "powsolve/equation.hpp"
#include "powsolve/exact_scalar.hpp"
#include "powsolve/form.hpp"
#include "powsolve/matrix.hpp"

#include <vector>

namespace powsolve {

/// Basis of Z(f) = { X : HX is symmetric }, H the Hessian of f.
struct CenterBasis {
    int n = 0;
    std::vector<RationalMatrix> basis;
    /// Pairwise commutativity of the basis. False signals a degenerate form.
    bool commutative = true;

    std::size_t dim() const noexcept { return basis.size(); }
};

/// Exact center basis. Unknowns are ordered c11, c12, ..., cnn; the nullspace comes from
/// fraction-free elimination. Requires rational coefficients and d >= 3.
CenterBasis computeCenter(const NAryForm& f);

/// True when every coefficient of (HX)^T - HX vanishes.
bool inCenter(const NAryForm& f, const RationalMatrix& x);

/// (d-1) x 3 system in (c12, c22 - c11, c21); row i is (a_i, a_{i+1}, -a_{i+2}).
RationalMatrix binaryCenterSystem(const BinaryForm& form);

/// Generator Lambda = [[0, -D3], [D1, D2]] of Z(F) when the binary system has rank 2.
struct CenterGenerator {
    Rational d1, d2, d3;
    RationalMatrix lambda;
    /// D2^2 - 4 D1 D3.
    Rational discriminant;
    /// (D2 + sqrt(discriminant)) / 2 and (D2 - sqrt(discriminant)) / 2.
    ExactScalar lambda1, lambda2;
};

/// D1, D2, D3 of the first three binomial-scaled coefficients.
struct CenterInvariants {
    Rational d1, d2, d3;
    Rational discriminant() const { return d2 * d2 - 4 * d1 * d3; }
};

CenterInvariants centerInvariants(const std::vector<Rational>& norm);

/// Throws CenterRankError when the system rank is not 2, PivotError when D1 = 0.
CenterGenerator centerGenerator(const BinaryForm& form);

/// The first partials of f are linearly independent.
bool isNondegenerate(const NAryForm& f);

}  // namespace powsolve
