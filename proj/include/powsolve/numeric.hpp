#pragma once

#include "powsolve/rational.hpp"

#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace powsolve {

inline constexpr unsigned kDefaultBits = 64;

/// Binary floating value with its own mantissa precision (MPFR).
///
/// Results of binary operations carry the larger of the two operand precisions. There is
/// no process-wide default precision.
class Real {
public:
    explicit Real(unsigned bits = kDefaultBits);
    Real(double value, unsigned bits);
    Real(long value, unsigned bits);
    Real(const Rational& value, unsigned bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    unsigned bits() const noexcept { return static_cast<unsigned>(mpfr_get_prec(value_)); }

    mpfr_ptr raw() noexcept { return value_; }
    mpfr_srcptr raw() const noexcept { return value_; }

    double toDouble() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Nearest integer.
    Integer round() const;
    bool isFinite() const { return mpfr_number_p(value_) != 0; }
    bool isZero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    /// Scientific notation with `digits` significant digits.
    std::string toString(int digits = 20) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
    Real operator-() const;

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
    friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real max(const Real& a, const Real& b);
Real pi(unsigned bits);
/// |x|^(1/k) * sign(x) for odd k; requires x >= 0 for even k.
Real rootn(const Real& x, unsigned k);
/// 2^-bits, the unit roundoff of a `bits`-bit mantissa (up to a factor 2).
Real epsilon(unsigned bits);

/// Complex number over Real. Used for every numeric evaluation of radical expressions.
class Complex {
public:
    explicit Complex(unsigned bits = kDefaultBits) : re_(bits), im_(bits) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(std::move(re)), im_(re_.bits()) {}
    Complex(double re, double im, unsigned bits) : re_(re, bits), im_(im, bits) {}
    Complex(const Rational& re, unsigned bits) : re_(re, bits), im_(0L, bits) {}

    const Real& re() const noexcept { return re_; }
    const Real& im() const noexcept { return im_; }
    unsigned bits() const noexcept { return re_.bits() > im_.bits() ? re_.bits() : im_.bits(); }
    bool isFinite() const { return re_.isFinite() && im_.isFinite(); }

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator/=(const Complex& rhs);
    friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
    friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
    friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
    friend Complex operator/(Complex lhs, const Complex& rhs) { return lhs /= rhs; }
    Complex operator-() const { return {-re_, -im_}; }

    std::string toString(int digits = 20) const;

private:
    Real re_;
    Real im_;
};

using ComplexApprox = Complex;

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex polar(const Real& radius, const Real& angle);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, unsigned exponent);
/// e^(2 pi i k / n).
Complex unitRoot(unsigned n, long k, unsigned bits);
/// Principal k-th root, argument in (-pi/k, pi/k]; a negative real radicand with odd k
/// takes the real root instead.
Complex principalRoot(const Complex& z, unsigned k);

std::ostream& operator<<(std::ostream& os, const Real& x);
std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace powsolve
