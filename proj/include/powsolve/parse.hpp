#pragma once

#include "powsolve/equation.hpp"
#include "powsolve/form.hpp"
#include "powsolve/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace powsolve {

/// Sparse polynomial: variable name -> exponent, for each monomial.
using Monomial = std::map<std::string, int>;
using SparsePolynomial = std::map<Monomial, Rational>;

struct ParsedInput {
    std::string source;
    SparsePolynomial polynomial;
    /// Variables that occur with a nonzero coefficient, in canonical order (x, y, x1, ..., x9).
    std::vector<std::string> variables;

    int degree() const;
    bool homogeneous() const;

    /// One variable, or a binary form in x and y dehomogenized at y = 1. Throws ParseError.
    UnivariateEquation toUnivariate() const;
    /// Homogeneous input as is; a univariate polynomial is homogenized with a second variable.
    NAryForm toForm() const;
    /// Names for the variables of toForm().
    std::vector<std::string> formVariables() const;
};

/// Grammar, loosest binding first:
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := atom ('^' integer)?
///   atom    := integer ('/' integer)? | variable | '(' sum ')'
/// Variables are x, y and x1..x9. Products and powers are expanded.
ParsedInput parsePolynomial(std::string_view text);

/// Whitespace- or comma-separated rationals, leading coefficient first.
UnivariateEquation parseCoefficients(std::string_view text);

/// Canonical text: terms by decreasing total degree, then decreasing exponents in variable order.
std::string render(const SparsePolynomial& p);

}  // namespace powsolve
