#include "powsolve/exact_scalar.hpp"

#include "powsolve/errors.hpp"
#include "powsolve/numeric.hpp"

#include <ostream>
#include <stdexcept>

namespace powsolve {

ExactScalar::ExactScalar(Rational a, Rational b, Rational delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {
    if (b_ != 0 && isSquare(delta_)) {
        // sqrt(delta) is rational: fold it in.
        a_ += b_ * *exactRoot(delta_, 2);
        b_ = 0;
    }
    normalize();
}

ExactScalar ExactScalar::sqrtOf(const Rational& r) {
    if (auto root = exactRoot(r, 2)) return ExactScalar(*root);
    return ExactScalar(0, 1, r);
}

const Rational& ExactScalar::rational() const {
    if (!isRational()) throw std::logic_error("scalar " + toString() + " is not rational");
    return a_;
}

ExactScalar ExactScalar::conjugate() const {
    ExactScalar c = *this;
    c.b_ = -c.b_;
    return c;
}

Rational ExactScalar::norm() const { return a_ * a_ - b_ * b_ * delta_; }

void ExactScalar::normalize() {
    if (b_ == 0) delta_ = 0;
}

void ExactScalar::joinField(const ExactScalar& rhs) {
    if (rhs.b_ == 0 || rhs.delta_ == delta_) return;
    if (b_ == 0) {
        delta_ = rhs.delta_;
        return;
    }
    throw FieldMismatch("cannot combine values over sqrt(" + powsolve::toString(delta_) + ") and sqrt(" +
                        powsolve::toString(rhs.delta_) + ")");
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
    joinField(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    normalize();
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
    joinField(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    normalize();
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
    joinField(rhs);
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * delta_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    normalize();
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
    if (rhs.isZero()) throw std::domain_error("division by zero");
    joinField(rhs);
    const Rational n = rhs.norm();
    ExactScalar inverse(rhs.a_ / n, -rhs.b_ / n, rhs.delta_);
    return *this *= inverse;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) {
    if (lhs.a_ != rhs.a_ || lhs.b_ != rhs.b_) return false;
    return lhs.b_ == 0 || lhs.delta_ == rhs.delta_;
}

Complex ExactScalar::approx(unsigned bits) const {
    Complex value(a_, bits);
    if (b_ == 0) return value;
    const Real root = sqrt(abs(Real(delta_, bits)));
    const Real scaled = Real(b_, bits) * root;
    if (delta_ > 0) return value + Complex(scaled);
    return value + Complex(Real(0L, bits), scaled);
}

std::string ExactScalar::toString() const {
    if (b_ == 0) return powsolve::toString(a_);
    std::string radical = "sqrt(" + powsolve::toString(delta_) + ")";
    std::string out;
    if (a_ != 0) out = powsolve::toString(a_);
    if (b_ == 1) {
        out += a_ != 0 ? "+" + radical : radical;
    } else if (b_ == -1) {
        out += "-" + radical;
    } else {
        const std::string coeff = powsolve::toString(b_);
        if (a_ != 0 && b_ > 0) out += "+";
        out += coeff + "*" + radical;
    }
    return out;
}

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
    ExactScalar result(1L);
    ExactScalar factor = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= factor;
        exponent >>= 1U;
        if (exponent != 0) factor *= factor;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& value) { return os << value.toString(); }

}  // namespace powsolve
