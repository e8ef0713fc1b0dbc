#pragma once

#include "powsolve/numeric.hpp"
#include "powsolve/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace powsolve {

/// One root of an equation, with the closed form it came from.
struct RadicalRoot {
    /// Prefix expression, e.g. "div(sub(mul(mul(delta,zeta(5,1)),lambda1),lambda2),...)".
    std::string expr;
    /// Infix text for humans.
    std::string pretty;
    /// Set when the root is known to be this rational exactly.
    std::optional<Rational> exact;
    Complex value;
    int multiplicity = 1;
};

/// A change of variable applied before solving; roots are mapped back through it.
struct Transform {
    enum class Kind { FactorZero, Reversal, Shift };
    Kind kind;
    /// Multiplicity of the zero root for FactorZero.
    int count = 0;
    /// g(y) = f(y + shift) for Shift.
    Rational shift = 0;

    std::string describe() const;
};

struct RootSet {
    int degree = 0;
    std::vector<RadicalRoot> roots;
    /// Which closed form produced the roots.
    std::string method;
    std::vector<Transform> preTransforms;
    std::vector<std::string> notes;

    int totalMultiplicity() const;
    /// Roots repeated by multiplicity.
    std::vector<Complex> values() const;
};

}  // namespace powsolve
