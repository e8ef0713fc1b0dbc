#include "powsolve/center.hpp"

#include "powsolve/errors.hpp"

#include <map>

namespace powsolve {

namespace {

std::vector<RationalMatrix> toMatrices(const std::vector<std::vector<Rational>>& vectors, std::size_t n) {
    std::vector<RationalMatrix> out;
    for (const auto& v : vectors) {
        RationalMatrix m(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
        out.push_back(std::move(m));
    }
    return out;
}

bool commute(const RationalMatrix& a, const RationalMatrix& b) { return a * b == b * a; }

}  // namespace

CenterBasis computeCenter(const NAryForm& f) {
    if (f.degree() < 3) throw DegreeError("center computation needs degree >= 3");
    if (!f.isRational()) throw std::invalid_argument("center computation needs rational coefficients");
    const auto n = static_cast<std::size_t>(f.variables());
    const Matrix<NAryForm> h = hessian(f);

    // Row per (i < j, monomial m): coefficient of m in (HX)_ij - (HX)_ji.
    // (HX)_ij = sum_k H_ik c_kj, unknown c_kj at column k*n + j.
    const auto mons = monomials(f.variables(), f.degree() - 2);
    std::map<Exponents, std::size_t> monIndex;
    for (std::size_t k = 0; k < mons.size(); ++k) monIndex.emplace(mons[k], k);

    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::vector<Rational>> block(mons.size(), std::vector<Rational>(n * n, Rational(0)));
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& [e, c] : h(i, k).terms()) block[monIndex.at(e)][k * n + j] += c.rational();
                for (const auto& [e, c] : h(j, k).terms()) block[monIndex.at(e)][k * n + i] -= c.rational();
            }
            for (auto& r : block) rows.push_back(std::move(r));
        }
    }

    std::vector<std::vector<Rational>> kernel;
    if (rows.empty()) {
        // n = 1: every 1x1 matrix is central.
        kernel.push_back({Rational(1)});
    } else {
        RationalMatrix system(rows.size(), n * n, Rational(0));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < n * n; ++c) system(r, c) = rows[r][c];
        kernel = nullspace(system);
    }

    CenterBasis out;
    out.n = f.variables();
    out.basis = toMatrices(kernel, n);
    for (std::size_t a = 0; a < out.basis.size() && out.commutative; ++a)
        for (std::size_t b = a + 1; b < out.basis.size(); ++b)
            if (!commute(out.basis[a], out.basis[b])) {
                out.commutative = false;
                break;
            }
    return out;
}

bool inCenter(const NAryForm& f, const RationalMatrix& x) {
    const Matrix<NAryForm> h = hessian(f);
    const std::size_t n = x.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            NAryForm diff(f.variables(), f.degree() - 2);
            for (std::size_t k = 0; k < n; ++k) {
                diff += ExactScalar(x(k, j)) * h(i, k);
                diff -= ExactScalar(x(k, i)) * h(j, k);
            }
            if (!diff.isZero()) return false;
        }
    }
    return true;
}

RationalMatrix binaryCenterSystem(const BinaryForm& form) {
    const int d = form.degree();
    if (d < 3) throw DegreeError("binary center system needs degree >= 3");
    RationalMatrix m(static_cast<std::size_t>(d - 1), 3, Rational(0));
    for (int i = 0; i + 2 <= d; ++i) {
        const auto r = static_cast<std::size_t>(i);
        m(r, 0) = form.norm(i);
        m(r, 1) = form.norm(i + 1);
        m(r, 2) = -form.norm(i + 2);
    }
    return m;
}

CenterInvariants centerInvariants(const std::vector<Rational>& a) {
    if (a.size() < 4) throw DegreeError("center invariants need degree >= 3");
    return {a[0] * a[2] - a[1] * a[1], a[0] * a[3] - a[1] * a[2], a[1] * a[3] - a[2] * a[2]};
}

CenterGenerator centerGenerator(const BinaryForm& form) {
    const std::size_t r = rank(binaryCenterSystem(form));
    if (r != 2) throw CenterRankError(static_cast<int>(r), "binary center system has rank " + std::to_string(r) + ", expected 2");
    const CenterInvariants inv = centerInvariants(form.normCoeffs());
    if (inv.d1 == 0) throw PivotError("D1 = 0: the generator's pivot vanishes");

    CenterGenerator g;
    g.d1 = inv.d1;
    g.d2 = inv.d2;
    g.d3 = inv.d3;
    g.lambda = RationalMatrix(2, 2, Rational(0));
    g.lambda(0, 1) = -inv.d3;
    g.lambda(1, 0) = inv.d1;
    g.lambda(1, 1) = inv.d2;
    g.discriminant = inv.discriminant();
    const ExactScalar root = ExactScalar::sqrtOf(g.discriminant);
    g.lambda1 = (ExactScalar(inv.d2) + root) / ExactScalar(2L);
    g.lambda2 = (ExactScalar(inv.d2) - root) / ExactScalar(2L);
    return g;
}

bool isNondegenerate(const NAryForm& f) {
    if (f.degree() == 0) return false;
    const auto mons = monomials(f.variables(), f.degree() - 1);
    std::map<Exponents, std::size_t> index;
    for (std::size_t k = 0; k < mons.size(); ++k) index.emplace(mons[k], k);
    RationalMatrix m(static_cast<std::size_t>(f.variables()), mons.size(), Rational(0));
    for (int i = 0; i < f.variables(); ++i) {
        const NAryForm g = derivative(f, i);
        for (const auto& [e, c] : g.terms()) m(static_cast<std::size_t>(i), index.at(e)) = c.rational();
    }
    return rank(m) == static_cast<std::size_t>(f.variables());
}

}  // namespace powsolve
