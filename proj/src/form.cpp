#include "powsolve/form.hpp"

#include "powsolve/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace powsolve {

NAryForm::NAryForm(int variables, int degree) : n_(variables), d_(degree) {
    if (variables < 1) throw std::invalid_argument("a form needs at least one variable");
    if (degree < 0) throw DegreeError("negative degree");
}

NAryForm NAryForm::fromBinary(const BinaryForm& form) {
    const int d = form.degree();
    NAryForm f(2, d);
    for (int i = 0; i <= d; ++i) f.add({d - i, i}, ExactScalar(binomial(d, i) * form.norm(i)));
    return f;
}

ExactScalar NAryForm::coefficient(const Exponents& e) const {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector has the wrong length");
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactScalar() : it->second;
}

void NAryForm::add(const Exponents& e, const ExactScalar& c) {
    if (static_cast<int>(e.size()) != n_ || std::accumulate(e.begin(), e.end(), 0) != d_) {
        throw std::invalid_argument("exponent vector does not match the form's shape");
    }
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

bool NAryForm::isRational() const {
    for (const auto& [e, c] : terms_)
        if (!c.isRational()) return false;
    return true;
}

NAryForm& NAryForm::operator+=(const NAryForm& rhs) {
    if (rhs.n_ != n_ || rhs.d_ != d_) throw std::invalid_argument("adding forms of different shape");
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
}

NAryForm& NAryForm::operator-=(const NAryForm& rhs) {
    if (rhs.n_ != n_ || rhs.d_ != d_) throw std::invalid_argument("subtracting forms of different shape");
    for (const auto& [e, c] : rhs.terms_) add(e, -c);
    return *this;
}

NAryForm operator*(const NAryForm& a, const NAryForm& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("multiplying forms in different variables");
    NAryForm out(a.n_, a.d_ + b.d_);
    Exponents e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add(e, ca * cb);
        }
    }
    return out;
}

NAryForm operator*(const ExactScalar& s, const NAryForm& a) {
    NAryForm out(a.n_, a.d_);
    for (const auto& [e, c] : a.terms_) out.add(e, s * c);
    return out;
}

ExactScalar NAryForm::operator()(const std::vector<ExactScalar>& point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point has the wrong dimension");
    ExactScalar sum;
    for (const auto& [e, c] : terms_) {
        ExactScalar term = c;
        for (int i = 0; i < n_; ++i) term *= pow(point[static_cast<std::size_t>(i)], static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
        sum += term;
    }
    return sum;
}

Complex NAryForm::operator()(const std::vector<Complex>& point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point has the wrong dimension");
    const unsigned bits = point.empty() ? kDefaultBits : point.front().bits();
    Complex sum(bits);
    for (const auto& [e, c] : terms_) {
        Complex term = c.approx(bits);
        for (int i = 0; i < n_; ++i) term *= pow(point[static_cast<std::size_t>(i)], static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
        sum += term;
    }
    return sum;
}

BinaryForm NAryForm::toBinary() const {
    if (n_ != 2) throw std::invalid_argument("not a binary form");
    std::vector<Rational> norm;
    for (int i = 0; i <= d_; ++i) norm.push_back(coefficient({d_ - i, i}).rational() / binomial(d_, i));
    return BinaryForm(std::move(norm));
}

std::string NAryForm::toString(const std::vector<std::string>& names) const {
    const auto vars = names.empty() ? defaultVariableNames(n_) : names;
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool monomialOnly = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        std::string coeff = c.toString();
        bool negative = false;
        if (c.isRational()) {
            negative = c.rational() < 0;
            coeff = powsolve::toString(abs(c.rational()));
        } else {
            coeff = "(" + coeff + ")";
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool needStar = false;
        if (coeff != "1" || monomialOnly) {
            os << coeff;
            needStar = true;
        }
        for (int i = 0; i < n_; ++i) {
            const int k = e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            if (needStar) os << "*";
            os << vars[static_cast<std::size_t>(i)];
            if (k > 1) os << "^" << k;
            needStar = true;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void enumerate(int remaining, std::size_t pos, Exponents& current, std::vector<Exponents>& out) {
    if (pos + 1 == current.size()) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current[pos] = k;
        enumerate(remaining - k, pos + 1, current, out);
    }
}

}  // namespace

std::vector<Exponents> monomials(int variables, int degree) {
    std::vector<Exponents> out;
    Exponents current(static_cast<std::size_t>(variables), 0);
    enumerate(degree, 0, current, out);
    return out;
}

Rational multinomial(const Exponents& e) {
    Integer num;
    const int d = std::accumulate(e.begin(), e.end(), 0);
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(d));
    Integer den = 1;
    for (int k : e) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
        den *= f;
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

NAryForm derivative(const NAryForm& f, int variable) {
    if (f.degree() == 0) return NAryForm(f.variables(), 0);
    NAryForm out(f.variables(), f.degree() - 1);
    for (const auto& [e, c] : f.terms()) {
        const int k = e[static_cast<std::size_t>(variable)];
        if (k == 0) continue;
        Exponents lowered = e;
        --lowered[static_cast<std::size_t>(variable)];
        out.add(lowered, ExactScalar(static_cast<long>(k)) * c);
    }
    return out;
}

Matrix<NAryForm> hessian(const NAryForm& f) {
    if (f.degree() < 2) throw DegreeError("hessian needs degree >= 2");
    const auto n = static_cast<std::size_t>(f.variables());
    Matrix<NAryForm> h(n, n, NAryForm(f.variables(), f.degree() - 2));
    for (std::size_t i = 0; i < n; ++i) {
        const NAryForm first = derivative(f, static_cast<int>(i));
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = derivative(first, static_cast<int>(j));
            h(j, i) = h(i, j);
        }
    }
    return h;
}

NAryForm substitute(const NAryForm& f, const Matrix<ExactScalar>& p) {
    const int n = f.variables();
    if (static_cast<int>(p.rows()) != n || static_cast<int>(p.cols()) != n) {
        throw std::invalid_argument("substitution matrix has the wrong size");
    }
    // x_i = sum_j P_ij y_j
    std::vector<NAryForm> images;
    for (int i = 0; i < n; ++i) {
        NAryForm xi(n, 1);
        for (int j = 0; j < n; ++j) {
            Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = 1;
            xi.add(e, p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        }
        images.push_back(std::move(xi));
    }
    NAryForm out(n, f.degree());
    for (const auto& [e, c] : f.terms()) {
        NAryForm term(n, 0);
        term.add(Exponents(static_cast<std::size_t>(n), 0), c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) term = term * images[static_cast<std::size_t>(i)];
        out += term;
    }
    return out;
}

NAryForm substitute(const NAryForm& f, const RationalMatrix& p) {
    Matrix<ExactScalar> q(p.rows(), p.cols());
    for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.cols(); ++c) q(r, c) = ExactScalar(p(r, c));
    return substitute(f, q);
}

NAryForm LinearForm::power(int degree) const {
    const int n = static_cast<int>(coefficients.size());
    NAryForm out(n, degree);
    for (const auto& e : monomials(n, degree)) {
        ExactScalar c(multinomial(e));
        for (int i = 0; i < n; ++i) {
            const int k = e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            c *= pow(coefficients[static_cast<std::size_t>(i)], static_cast<unsigned>(k));
            if (c.isZero()) break;
        }
        out.add(e, c);
    }
    return out;
}

bool LinearForm::isZero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const ExactScalar& c) { return c.isZero(); });
}

std::string LinearForm::toString(const std::vector<std::string>& names) const {
    NAryForm f(static_cast<int>(coefficients.size()), 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Exponents e(coefficients.size(), 0);
        e[i] = 1;
        f.add(e, coefficients[i]);
    }
    return f.toString(names);
}

bool proportional(const LinearForm& a, const LinearForm& b) {
    const auto& x = a.coefficients;
    const auto& y = b.coefficients;
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!(x[i] * y[j] - x[j] * y[i]).isZero()) return false;
    return true;
}

bool PowerSumDecomposition::distinct() const {
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = i + 1; j < summands.size(); ++j)
            if (proportional(summands[i].form, summands[j].form)) return false;
    return true;
}

NAryForm expand(const PowerSumDecomposition& dec, int variables) {
    NAryForm out(variables, dec.degree);
    for (const auto& s : dec.summands) {
        if (static_cast<int>(s.form.coefficients.size()) != variables) {
            throw std::invalid_argument("linear form has the wrong number of variables");
        }
        out += s.coefficient * s.form.power(dec.degree);
    }
    return out;
}

std::map<Exponents, Complex> expand(const NumericPowerSum& dec, int variables, unsigned bits) {
    std::map<Exponents, Complex> out;
    for (const auto& e : monomials(variables, dec.degree)) {
        Complex sum(bits);
        const Complex weight(multinomial(e), bits);
        for (const auto& s : dec.summands) {
            Complex term = s.coefficient * weight;
            for (int i = 0; i < variables; ++i) term *= pow(s.form.at(static_cast<std::size_t>(i)), static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
            sum += term;
        }
        out.emplace(e, std::move(sum));
    }
    return out;
}

std::vector<std::string> defaultVariableNames(int variables) {
    std::vector<std::string> names;
    for (int i = 1; i <= variables; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace powsolve
