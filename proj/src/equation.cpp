#include "powsolve/equation.hpp"

#include "powsolve/errors.hpp"

#include <sstream>

namespace powsolve {

UnivariateEquation UnivariateEquation::fromPlainCoeffs(std::vector<Rational> plain) {
    if (plain.empty()) throw DegreeError("empty coefficient list");
    if (plain.front() == 0) throw DegreeError("leading coefficient is zero");
    const int d = static_cast<int>(plain.size()) - 1;
    std::vector<Rational> norm;
    norm.reserve(plain.size());
    for (int i = 0; i <= d; ++i) norm.push_back(plain[static_cast<std::size_t>(i)] / binomial(d, i));
    return UnivariateEquation(std::move(plain), std::move(norm));
}

UnivariateEquation UnivariateEquation::fromNormCoeffs(std::vector<Rational> norm) {
    if (norm.empty()) throw DegreeError("empty coefficient list");
    if (norm.front() == 0) throw DegreeError("leading coefficient is zero");
    const int d = static_cast<int>(norm.size()) - 1;
    std::vector<Rational> plain;
    plain.reserve(norm.size());
    for (int i = 0; i <= d; ++i) plain.push_back(norm[static_cast<std::size_t>(i)] * binomial(d, i));
    return UnivariateEquation(std::move(plain), std::move(norm));
}

Rational UnivariateEquation::operator()(const Rational& x) const {
    Rational acc = 0;
    for (const auto& b : plain_) acc = acc * x + b;
    return acc;
}

std::string UnivariateEquation::toString() const {
    std::ostringstream os;
    const int d = degree();
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        const Rational& b = plain_[static_cast<std::size_t>(i)];
        if (b == 0) continue;
        const int power = d - i;
        Rational mag = abs(b);
        if (first) {
            if (b < 0) os << "-";
        } else {
            os << (b < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1 && power != 0;
        if (!unit) os << powsolve::toString(mag);
        if (power > 0) {
            if (!unit) os << "*";
            os << "x";
            if (power > 1) os << "^" << power;
        }
    }
    if (first) os << "0";
    return os.str();
}

BinaryForm::BinaryForm(std::vector<Rational> norm) : norm_(std::move(norm)) {
    if (norm_.empty()) throw DegreeError("empty coefficient list");
}

Complex evaluate(const UnivariateEquation& eq, const Complex& x) {
    const unsigned bits = x.bits();
    Complex acc(bits);
    for (const auto& b : eq.plainCoeffs()) acc = acc * x + Complex(b, bits);
    return acc;
}

UnivariateEquation reversed(const UnivariateEquation& eq) {
    if (eq.plainCoeffs().back() == 0) throw DegreeError("reversal needs a nonzero constant term");
    std::vector<Rational> plain(eq.plainCoeffs().rbegin(), eq.plainCoeffs().rend());
    return UnivariateEquation::fromPlainCoeffs(std::move(plain));
}

UnivariateEquation shifted(const UnivariateEquation& eq, const Rational& shift) {
    // Repeated synthetic division (Taylor shift), on ascending coefficients.
    std::vector<Rational> c(eq.plainCoeffs().rbegin(), eq.plainCoeffs().rend());
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) c[j] += shift * c[j + 1];
    return UnivariateEquation::fromPlainCoeffs({c.rbegin(), c.rend()});
}

UnivariateEquation monic(const UnivariateEquation& eq) {
    std::vector<Rational> plain = eq.plainCoeffs();
    const Rational lead = plain.front();
    for (auto& b : plain) b /= lead;
    return UnivariateEquation::fromPlainCoeffs(std::move(plain));
}

UnivariateEquation fromRoots(const std::vector<Rational>& roots) {
    std::vector<Rational> plain{Rational(1)};
    for (const auto& r : roots) {
        plain.push_back(0);
        for (std::size_t i = plain.size() - 1; i > 0; --i) plain[i] -= r * plain[i - 1];
    }
    return UnivariateEquation::fromPlainCoeffs(std::move(plain));
}

}  // namespace powsolve
