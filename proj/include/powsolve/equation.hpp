#pragma once

#include "powsolve/numeric.hpp"
#include "powsolve/rational.hpp"

#include <vector>

namespace powsolve {

/// f(x) = sum_i b_i x^(d-i) = sum_i C(d,i) a_i x^(d-i), with b_0 = a_0 != 0.
///
/// Both coefficient conventions are held exactly. The binomial-scaled a_i are the ones the
/// center invariants (D1, D2, D3, the Hankel matrix) are written in.
class UnivariateEquation {
public:
    /// Leading coefficient first. Throws DegreeError for an empty list or zero leading term.
    static UnivariateEquation fromPlainCoeffs(std::vector<Rational> plain);
    static UnivariateEquation fromNormCoeffs(std::vector<Rational> norm);

    int degree() const noexcept { return static_cast<int>(plain_.size()) - 1; }
    const std::vector<Rational>& plainCoeffs() const noexcept { return plain_; }
    const std::vector<Rational>& normCoeffs() const noexcept { return norm_; }
    const Rational& plain(int i) const { return plain_.at(static_cast<std::size_t>(i)); }
    const Rational& norm(int i) const { return norm_.at(static_cast<std::size_t>(i)); }

    /// Exact value at a rational point.
    Rational operator()(const Rational& x) const;

    friend bool operator==(const UnivariateEquation& a, const UnivariateEquation& b) { return a.plain_ == b.plain_; }

    std::string toString() const;

private:
    UnivariateEquation(std::vector<Rational> plain, std::vector<Rational> norm)
        : plain_(std::move(plain)), norm_(std::move(norm)) {}

    std::vector<Rational> plain_;
    std::vector<Rational> norm_;
};

/// F(x, y) = sum_i C(d,i) a_i x^(d-i) y^i; the homogenization of a UnivariateEquation.
class BinaryForm {
public:
    explicit BinaryForm(std::vector<Rational> norm);

    static BinaryForm homogenize(const UnivariateEquation& eq) { return BinaryForm(eq.normCoeffs()); }
    /// F(x, 1). Throws DegreeError when a_0 = 0.
    UnivariateEquation dehomogenize() const { return UnivariateEquation::fromNormCoeffs(norm_); }

    int degree() const noexcept { return static_cast<int>(norm_.size()) - 1; }
    const std::vector<Rational>& normCoeffs() const noexcept { return norm_; }
    const Rational& norm(int i) const { return norm_.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.norm_ == b.norm_; }

private:
    std::vector<Rational> norm_;
};

/// Horner evaluation on the plain coefficients, at the precision of x.
Complex evaluate(const UnivariateEquation& eq, const Complex& x);

/// x^d f(1/x): coefficients reversed. Requires a nonzero constant term.
UnivariateEquation reversed(const UnivariateEquation& eq);

/// g(y) = f(y + shift).
UnivariateEquation shifted(const UnivariateEquation& eq, const Rational& shift);

/// Same roots, leading coefficient 1.
UnivariateEquation monic(const UnivariateEquation& eq);

/// prod (x - r_i), expanded exactly.
UnivariateEquation fromRoots(const std::vector<Rational>& roots);

}  // namespace powsolve
