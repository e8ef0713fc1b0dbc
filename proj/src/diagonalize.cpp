#include "powsolve/diagonalize.hpp"

#include "powsolve/errors.hpp"
#include "powsolve/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace powsolve {

const char* toString(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::DistinctRational: return "distinct-rational";
        case SpectrumKind::Repeated: return "repeated";
        case SpectrumKind::Irrational: return "irrational";
        case SpectrumKind::NonCommutative: return "non-commutative";
    }
    return "unknown";
}

namespace {

using Poly = std::vector<Rational>;  // ascending powers

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {Rational(0)};
    Poly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    return out;
}

bool isZeroPoly(const Poly& p) { return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; }); }

// b must be trimmed and nonzero.
Poly remainder(Poly a, const Poly& b) {
    trim(a);
    while (!isZeroPoly(a) && a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

bool squarefree(const Poly& p) {
    Poly a = p;
    Poly b = derivative(p);
    trim(a);
    trim(b);
    if (isZeroPoly(b)) return a.size() <= 1;
    while (!isZeroPoly(b)) {
        trim(b);
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;  // gcd is a nonzero constant
}

UnivariateEquation asEquation(const Poly& ascending) {
    return UnivariateEquation::fromPlainCoeffs({ascending.rbegin(), ascending.rend()});
}

std::vector<Rational> firstPrimes(std::size_t count) {
    std::vector<Rational> out;
    for (long candidate = 2; out.size() < count; ++candidate) {
        bool prime = true;
        for (long q = 2; q * q <= candidate; ++q)
            if (candidate % q == 0) {
                prime = false;
                break;
            }
        if (prime) out.emplace_back(candidate);
    }
    return out;
}

std::vector<Rational> weightsFor(int attempt, std::size_t count, std::mt19937_64& rng) {
    std::vector<Rational> w = firstPrimes(count);
    if (attempt == 1) {
        for (auto& r : w) r *= r;
    } else if (attempt >= 2) {
        std::uniform_int_distribution<long> dist(-97, 97);
        for (auto& r : w) {
            long v = 0;
            while (v == 0) v = dist(rng);
            r = v;
        }
    }
    return w;
}

RationalMatrix combine(const std::vector<RationalMatrix>& basis, const std::vector<Rational>& weights, std::size_t n) {
    RationalMatrix g(n, n, Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) g = g + weights[k] * basis[k];
    return g;
}

std::size_t firstNonzero(const std::vector<ExactScalar>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].isZero()) return i;
    return v.size();
}

}  // namespace

AlgebraProfile profile(const NAryForm& f, const CenterBasis& basis, const ProfileOptions& options) {
    const auto n = static_cast<std::size_t>(f.variables());
    AlgebraProfile out;
    out.dim = basis.dim();
    out.commutative = basis.commutative;

    std::mt19937_64 rng(options.seed);
    for (int attempt = 0; attempt < options.maxAttempts; ++attempt) {
        out.attempts = attempt + 1;
        out.weights = weightsFor(attempt, basis.dim(), rng);
        out.genericElement = combine(basis.basis, out.weights, n);
        out.charPoly = characteristicPolynomial(out.genericElement);
        if (!out.commutative) {
            out.spectrumKind = SpectrumKind::NonCommutative;
            return out;
        }
        if (squarefree(out.charPoly)) {
            out.rationalEigenvalues = rationalRoots(asEquation(out.charPoly));
            out.spectrumKind =
                out.rationalEigenvalues.size() == n ? SpectrumKind::DistinctRational : SpectrumKind::Irrational;
            return out;
        }
    }
    out.spectrumKind = SpectrumKind::Repeated;
    return out;
}

DiagonalDecomposition diagonalizeForm(const NAryForm& f, const ProfileOptions& options) {
    const auto n = static_cast<std::size_t>(f.variables());
    const CenterBasis basis = computeCenter(f);
    AlgebraProfile prof = profile(f, basis, options);
    switch (prof.spectrumKind) {
        case SpectrumKind::NonCommutative:
            throw NotDiagonalizable("center algebra is not commutative (degenerate form)");
        case SpectrumKind::Repeated:
            throw NotDiagonalizable("generic center element has a repeated eigenvalue");
        case SpectrumKind::Irrational:
            throw IrrationalSpectrum("generic center element does not split over Q");
        case SpectrumKind::DistinctRational:
            break;
    }
    if (basis.dim() != n) throw NotDiagonalizable("center has dimension " + std::to_string(basis.dim()) + ", not " + std::to_string(n));

    const RationalMatrix& g = prof.genericElement;
    const auto& mu = prof.rationalEigenvalues;
    const RationalMatrix id = identityMatrix(n);

    std::vector<RationalMatrix> idempotents;
    std::vector<std::vector<Rational>> columns;
    for (std::size_t i = 0; i < n; ++i) {
        RationalMatrix e = id;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            e = e * ((1 / (mu[i] - mu[j])) * (g - mu[j] * id));
        }
        std::size_t col = 0;
        while (col < n && e.column(col) == std::vector<Rational>(n, Rational(0))) ++col;
        if (col == n) throw NotDiagonalizable("vanishing idempotent");
        columns.push_back(e.column(col));
        idempotents.push_back(std::move(e));
    }

    RationalMatrix p(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) p(r, i) = columns[i][r];
    RationalMatrix pinv;
    try {
        pinv = inverse(p);
    } catch (const std::domain_error&) {
        throw NotDiagonalizable("idempotent images do not span the space");
    }

    // Scale each summand so its linear form starts with 1, then order them echelon-like.
    struct Summand {
        RationalMatrix idempotent;
        std::vector<Rational> column;
        std::vector<ExactScalar> form;
        Rational weight;
    };
    std::vector<Summand> summands;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ExactScalar> form;
        for (std::size_t c = 0; c < n; ++c) form.emplace_back(pinv(i, c));
        const std::size_t lead = firstNonzero(form);
        const Rational u = form[lead].rational();
        for (auto& c : form) c /= ExactScalar(u);
        std::vector<Rational> column = columns[i];
        for (auto& c : column) c *= u;
        std::vector<ExactScalar> point(column.begin(), column.end());
        const Rational weight = f(point).rational();
        summands.push_back({idempotents[i], std::move(column), std::move(form), weight});
    }
    std::stable_sort(summands.begin(), summands.end(),
                     [](const Summand& a, const Summand& b) { return firstNonzero(a.form) < firstNonzero(b.form); });

    DiagonalDecomposition out;
    out.p = RationalMatrix(n, n, Rational(0));
    out.asPowerSum.degree = f.degree();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r) out.p(r, i) = summands[i].column[r];
        out.idempotents.push_back(summands[i].idempotent);
        out.diagonal.push_back(summands[i].weight);
        out.asPowerSum.summands.push_back({ExactScalar(summands[i].weight), LinearForm{summands[i].form}});
    }
    out.profile = std::move(prof);
    return out;
}

namespace {

Matrix<Complex> toComplex(const RationalMatrix& m, unsigned bits) {
    Matrix<Complex> out(m.rows(), m.cols(), Complex(bits));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Complex(m(r, c), bits);
    return out;
}

Matrix<Complex> complexInverse(Matrix<Complex> a, unsigned bits) {
    const std::size_t n = a.rows();
    Matrix<Complex> inv(n, n, Complex(bits));
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = Complex(Real(1L, bits));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a(r, col)) > abs(a(pivot, col))) pivot = r;
        if (abs(a(pivot, col)).isZero()) throw NotDiagonalizable("numeric change of variables is singular");
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(a(pivot, c), a(col, c));
            std::swap(inv(pivot, c), inv(col, c));
        }
        const Complex scale = Complex(Real(1L, bits)) / a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex factor = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace

NumericDiagonalDecomposition diagonalizeNumeric(const NAryForm& f, unsigned bits, const ProfileOptions& options) {
    const auto n = static_cast<std::size_t>(f.variables());
    const CenterBasis basis = computeCenter(f);
    AlgebraProfile prof = profile(f, basis, options);
    if (prof.spectrumKind == SpectrumKind::NonCommutative) throw NotDiagonalizable("center algebra is not commutative");
    if (prof.spectrumKind == SpectrumKind::Repeated) throw NotDiagonalizable("generic center element has a repeated eigenvalue");
    if (basis.dim() != n) throw NotDiagonalizable("center has dimension " + std::to_string(basis.dim()) + ", not " + std::to_string(n));

    const unsigned work = bits + 64;
    const OracleRootSet eig = oracleRoots(asEquation(prof.charPoly), work);
    if (eig.roots.size() != n) throw NotDiagonalizable("eigenvalues did not separate numerically");

    const Matrix<Complex> g = toComplex(prof.genericElement, work);
    Matrix<Complex> id(n, n, Complex(work));
    for (std::size_t i = 0; i < n; ++i) id(i, i) = Complex(Real(1L, work));

    NumericDiagonalDecomposition out;
    out.p = Matrix<Complex>(n, n, Complex(work));
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<Complex> e = id;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Matrix<Complex> factor = g;
            for (std::size_t k = 0; k < n; ++k) factor(k, k) -= eig.roots[j].value;
            const Complex scale = Complex(Real(1L, work)) / (eig.roots[i].value - eig.roots[j].value);
            e = e * (scale * factor);
        }
        std::size_t best = 0;
        Real bestNorm(0L, work);
        for (std::size_t c = 0; c < n; ++c) {
            Real sum(0L, work);
            for (std::size_t r = 0; r < n; ++r) sum += norm(e(r, c));
            if (sum > bestNorm) {
                bestNorm = sum;
                best = c;
            }
        }
        for (std::size_t r = 0; r < n; ++r) out.p(r, i) = e(r, best);
        out.idempotents.push_back(std::move(e));
    }
    const Matrix<Complex> pinv = complexInverse(out.p, work);
    out.asPowerSum.degree = f.degree();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Complex> form = pinv.row(i);
        std::size_t lead = 0;
        for (std::size_t c = 1; c < n; ++c)
            if (abs(form[c]) > abs(form[lead])) lead = c;
        const Complex u = form[lead];
        for (auto& c : form) c /= u;
        for (std::size_t r = 0; r < n; ++r) out.p(r, i) *= u;
        const Complex weight = f(out.p.column(i));
        out.diagonal.push_back(weight);
        out.asPowerSum.summands.push_back({weight, std::move(form)});
    }
    out.profile = std::move(prof);
    return out;
}

}  // namespace powsolve
