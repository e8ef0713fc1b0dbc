#include "powsolve/numeric.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace powsolve {

namespace {

unsigned widest(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

// Raises x to at least `bits` precision without losing its value.
void widen(Real& x, unsigned bits) {
    if (x.bits() < bits) mpfr_prec_round(x.raw(), bits, MPFR_RNDN);
}

}  // namespace

Real::Real(unsigned bits) {
    mpfr_init2(value_, std::max<unsigned>(bits, MPFR_PREC_MIN));
    mpfr_set_zero(value_, 1);
}

Real::Real(double value, unsigned bits) : Real(bits) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real::Real(long value, unsigned bits) : Real(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, unsigned bits) : Real(bits) { mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN); }

Real::Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Integer Real::round() const {
    Integer out;
    mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
    return out;
}

std::string Real::toString(int digits) const {
    std::vector<char> buffer(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, value_);
    return buffer.data();
}

Real& Real::operator+=(const Real& rhs) {
    widen(*this, rhs.bits());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    widen(*this, rhs.bits());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    widen(*this, rhs.bits());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    widen(*this, rhs.bits());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r = *this;
    mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

#define POWSOLVE_UNARY(name, call)                \
    Real name(const Real& x) {                    \
        Real r(x.bits());                         \
        call(r.raw(), x.raw(), MPFR_RNDN);        \
        return r;                                 \
    }

POWSOLVE_UNARY(abs, mpfr_abs)
POWSOLVE_UNARY(sqrt, mpfr_sqrt)
POWSOLVE_UNARY(cbrt, mpfr_cbrt)
POWSOLVE_UNARY(cos, mpfr_cos)
POWSOLVE_UNARY(sin, mpfr_sin)
POWSOLVE_UNARY(exp, mpfr_exp)
POWSOLVE_UNARY(log, mpfr_log)

#undef POWSOLVE_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r(widest(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(unsigned bits) {
    Real r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real rootn(const Real& x, unsigned k) {
    Real r(x.bits());
    mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

Real epsilon(unsigned bits) {
    Real r(1L, bits);
    mpfr_mul_2si(r.raw(), r.raw(), -static_cast<long>(bits), MPFR_RNDN);
    return r;
}

Complex& Complex::operator+=(const Complex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
    Real re = re_ * rhs.re_ - im_ * rhs.im_;
    Real im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
    // Smith's algorithm keeps intermediates in range.
    if (abs(rhs.re_) >= abs(rhs.im_)) {
        const Real ratio = rhs.im_ / rhs.re_;
        const Real denom = rhs.re_ + rhs.im_ * ratio;
        Real re = (re_ + im_ * ratio) / denom;
        Real im = (im_ - re_ * ratio) / denom;
        re_ = std::move(re);
        im_ = std::move(im);
    } else {
        const Real ratio = rhs.re_ / rhs.im_;
        const Real denom = rhs.re_ * ratio + rhs.im_;
        Real re = (re_ * ratio + im_) / denom;
        Real im = (im_ * ratio - re_) / denom;
        re_ = std::move(re);
        im_ = std::move(im);
    }
    return *this;
}

std::string Complex::toString(int digits) const {
    std::string out = re_.toString(digits);
    if (im_.isZero()) return out;
    const bool negative = im_.sign() < 0;
    out += negative ? " - " : " + ";
    out += abs(im_).toString(digits) + "i";
    return out;
}

Real abs(const Complex& z) {
    Real r(z.bits());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Complex polar(const Real& radius, const Real& angle) { return {radius * cos(angle), radius * sin(angle)}; }

Complex sqrt(const Complex& z) { return principalRoot(z, 2); }

Complex pow(const Complex& z, unsigned exponent) {
    Complex result(Real(1L, z.bits()));
    Complex factor = z;
    while (exponent != 0) {
        if (exponent & 1U) result *= factor;
        exponent >>= 1U;
        if (exponent != 0) factor *= factor;
    }
    return result;
}

Complex unitRoot(unsigned n, long k, unsigned bits) {
    const long m = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    // Exact values on the axes avoid spurious 1e-20 imaginary parts.
    if (m == 0) return Complex(Real(1L, bits));
    if (2 * m == static_cast<long>(n)) return Complex(Real(-1L, bits));
    if (4 * m == static_cast<long>(n)) return {Real(0L, bits), Real(1L, bits)};
    if (4 * m == 3 * static_cast<long>(n)) return {Real(0L, bits), Real(-1L, bits)};
    const Real angle = pi(bits) * Real(2 * m, bits) / Real(static_cast<long>(n), bits);
    return polar(Real(1L, bits), angle);
}

Complex principalRoot(const Complex& z, unsigned k) {
    const unsigned bits = z.bits();
    if (k == 1) return z;
    if (z.im().isZero()) {
        if (z.re().sign() >= 0) return Complex(rootn(z.re(), k));
        if (k % 2 == 1) return Complex(rootn(z.re(), k));
        if (k == 2) return {Real(0L, bits), sqrt(-z.re())};
    }
    const Real radius = rootn(abs(z), k);
    const Real angle = arg(z) / Real(static_cast<long>(k), bits);
    return polar(radius, angle);
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.toString(); }
std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.toString(); }

}  // namespace powsolve
