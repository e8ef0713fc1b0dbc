#pragma once

#include "powsolve/rational.hpp"

#include <iosfwd>
#include <string>

namespace powsolve {

class Complex;

/// Element a + b*sqrt(delta) of Q(sqrt(delta)), or a plain rational when b = 0.
///
/// A scalar with b = 0 always drops its radicand, so it equals the plain rational a and
/// mixes freely with scalars of any field. Two scalars with b != 0 over different radicands
/// cannot be combined: that raises FieldMismatch rather than building a tower.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

    /// a + b*sqrt(delta). delta must not be the square of a rational unless b = 0.
    ExactScalar(Rational a, Rational b, Rational delta);

    /// Principal square root: a rational when r is a square, else 0 + 1*sqrt(r).
    static ExactScalar sqrtOf(const Rational& r);

    const Rational& rationalPart() const noexcept { return a_; }
    const Rational& radicalPart() const noexcept { return b_; }
    /// 0 for plain rationals.
    const Rational& radicand() const noexcept { return delta_; }

    bool isRational() const noexcept { return b_ == 0; }
    bool isZero() const noexcept { return a_ == 0 && b_ == 0; }

    /// The rational value; throws std::logic_error if the radical part is nonzero.
    const Rational& rational() const;

    ExactScalar conjugate() const;
    /// a^2 - b^2 delta, the field norm down to Q.
    Rational norm() const;

    ExactScalar& operator+=(const ExactScalar& rhs);
    ExactScalar& operator-=(const ExactScalar& rhs);
    ExactScalar& operator*=(const ExactScalar& rhs);
    ExactScalar& operator/=(const ExactScalar& rhs);

    friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
    friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
    friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
    friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
    ExactScalar operator-() const;

    friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs);

    /// Numeric value, with sqrt(delta) on the principal branch (i*sqrt(-delta) for delta < 0).
    Complex approx(unsigned bits) const;

    /// "3/4", "1/2+3/2*sqrt(5)", "-sqrt(-3)".
    std::string toString() const;

private:
    void joinField(const ExactScalar& rhs);
    void normalize();

    Rational a_{0};
    Rational b_{0};
    Rational delta_{0};
};

ExactScalar pow(const ExactScalar& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const ExactScalar& value);

}  // namespace powsolve
