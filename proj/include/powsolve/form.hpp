#pragma once

#include "powsolve/equation.hpp"
#include "powsolve/exact_scalar.hpp"
#include "powsolve/matrix.hpp"
#include "powsolve/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace powsolve {

using Exponents = std::vector<int>;

/// Homogeneous polynomial of degree d in n variables; zero coefficients are never stored.
class NAryForm {
public:
    NAryForm(int variables, int degree);

    static NAryForm fromBinary(const BinaryForm& form);
    static NAryForm fromUnivariate(const UnivariateEquation& eq) { return fromBinary(BinaryForm::homogenize(eq)); }

    int variables() const noexcept { return n_; }
    int degree() const noexcept { return d_; }
    const std::map<Exponents, ExactScalar>& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    /// Coefficient of x^e; zero when absent. Throws std::invalid_argument for a malformed e.
    ExactScalar coefficient(const Exponents& e) const;
    /// Adds c to the coefficient of x^e.
    void add(const Exponents& e, const ExactScalar& c);

    /// True when every coefficient is a plain rational.
    bool isRational() const;

    NAryForm& operator+=(const NAryForm& rhs);
    NAryForm& operator-=(const NAryForm& rhs);
    friend NAryForm operator+(NAryForm a, const NAryForm& b) { return a += b; }
    friend NAryForm operator-(NAryForm a, const NAryForm& b) { return a -= b; }
    friend NAryForm operator*(const NAryForm& a, const NAryForm& b);
    friend NAryForm operator*(const ExactScalar& s, const NAryForm& a);
    friend bool operator==(const NAryForm& a, const NAryForm& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    ExactScalar operator()(const std::vector<ExactScalar>& point) const;
    Complex operator()(const std::vector<Complex>& point) const;

    /// Back to the univariate/binary convention; requires n = 2.
    BinaryForm toBinary() const;

    /// Canonical text, e.g. "x1^3 + 3*x1^2*x2"; terms in decreasing lexicographic order.
    std::string toString(const std::vector<std::string>& names = {}) const;

private:
    int n_;
    int d_;
    std::map<Exponents, ExactScalar> terms_;
};

/// All exponent vectors of length n summing to d, in lexicographically decreasing order.
std::vector<Exponents> monomials(int variables, int degree);

/// Multinomial coefficient d! / prod(e_i!).
Rational multinomial(const Exponents& e);

NAryForm derivative(const NAryForm& f, int variable);

/// Entry (i, j) is d^2 f / dx_i dx_j, a form of degree d - 2. Throws DegreeError for d < 2.
Matrix<NAryForm> hessian(const NAryForm& f);

/// g(y) = f(P y).
NAryForm substitute(const NAryForm& f, const Matrix<ExactScalar>& p);
NAryForm substitute(const NAryForm& f, const RationalMatrix& p);

/// sum_j coefficients[j] * x_j.
struct LinearForm {
    std::vector<ExactScalar> coefficients;

    NAryForm power(int degree) const;
    bool isZero() const;
    std::string toString(const std::vector<std::string>& names) const;
};

/// True when a and b are proportional (every 2x2 cross product vanishes).
bool proportional(const LinearForm& a, const LinearForm& b);

struct PowerSummand {
    ExactScalar coefficient;
    LinearForm form;
};

/// f = sum_i coefficient_i * form_i^degree.
struct PowerSumDecomposition {
    int degree = 0;
    std::vector<PowerSummand> summands;

    /// Pairwise non-proportional linear forms.
    bool distinct() const;
};

NAryForm expand(const PowerSumDecomposition& dec, int variables);

struct NumericPowerSummand {
    Complex coefficient;
    std::vector<Complex> form;
};

/// The numeric-mode counterpart of PowerSumDecomposition.
struct NumericPowerSum {
    int degree = 0;
    std::vector<NumericPowerSummand> summands;
};

/// Coefficients of the expansion, keyed like NAryForm::terms.
std::map<Exponents, Complex> expand(const NumericPowerSum& dec, int variables, unsigned bits);

std::vector<std::string> defaultVariableNames(int variables);

}  // namespace powsolve
