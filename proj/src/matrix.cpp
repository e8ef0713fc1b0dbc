#include "powsolve/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace powsolve {

RationalMatrix identityMatrix(std::size_t n) { return RationalMatrix::identity(n, Rational(0), Rational(1)); }

EchelonForm bareissEchelon(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Matrix<Integer> a(rows, cols, Integer(0));
    for (std::size_t r = 0; r < rows; ++r) {
        const Integer scale = commonDenominator(m.row(r));
        for (std::size_t c = 0; c < cols; ++c) {
            Rational v = m(r, c) * scale;
            a(r, c) = v.get_num();
        }
    }

    EchelonForm out;
    Integer previous = 1;
    std::size_t pivotRow = 0;
    for (std::size_t col = 0; col < cols && pivotRow < rows; ++col) {
        std::size_t found = pivotRow;
        while (found < rows && a(found, col) == 0) ++found;
        if (found == rows) continue;
        if (found != pivotRow)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(found, c), a(pivotRow, c));

        const Integer pivot = a(pivotRow, col);
        for (std::size_t r = pivotRow + 1; r < rows; ++r) {
            const Integer factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c) {
                Integer v = pivot * a(r, c) - factor * a(pivotRow, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(r, c) = std::move(v);
            }
        }
        // Columns left of `col` in rows below the pivot are already zero.
        previous = pivot;
        out.pivotColumns.push_back(col);
        ++pivotRow;
    }
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return bareissEchelon(m).pivotColumns.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    const EchelonForm ech = bareissEchelon(m);
    const auto& pivots = ech.pivotColumns;

    std::vector<bool> isPivot(cols, false);
    for (auto p : pivots) isPivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t k = cols; k-- > 0;) {
        if (isPivot[k]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[k] = 1;
        for (std::size_t i = pivots.size(); i-- > 0;) {
            const std::size_t p = pivots[i];
            Rational sum = 0;
            for (std::size_t c = p + 1; c < cols; ++c) {
                if (ech.reduced(i, c) != 0 && v[c] != 0) sum += Rational(ech.reduced(i, c)) * v[c];
            }
            v[p] = -sum / Rational(ech.reduced(i, p));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::domain_error("inverse of a non-square matrix");
    RationalMatrix a = m;
    RationalMatrix inv = identityMatrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const Rational scale = 1 / a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

Rational trace(const RationalMatrix& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Rational determinant(const RationalMatrix& m) {
    const auto poly = characteristicPolynomial(m);
    // det(tI - m) at t = 0 is (-1)^n det(m).
    return m.rows() % 2 == 0 ? poly.front() : Rational(-poly.front());
}

std::vector<Rational> characteristicPolynomial(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RationalMatrix acc(n, n, Rational(0));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
        RationalMatrix next = k == 1 ? RationalMatrix(n, n, Rational(0)) : m * acc;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
        coeffs[n - k] = -trace(m * next) / Rational(static_cast<long>(k));
        acc = std::move(next);
    }
    return coeffs;
}

bool isZero(const RationalMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) return false;
    return true;
}

namespace {

RationalMatrix stack(const std::vector<RationalMatrix>& matrices) {
    if (matrices.empty()) return RationalMatrix(0, 0);
    const std::size_t len = matrices.front().rows() * matrices.front().cols();
    RationalMatrix out(matrices.size(), len, Rational(0));
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const auto& m = matrices[k];
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) out(k, r * m.cols() + c) = m(r, c);
    }
    return out;
}

}  // namespace

std::size_t spanRank(const std::vector<RationalMatrix>& matrices) {
    if (matrices.empty()) return 0;
    return rank(stack(matrices));
}

bool sameSpan(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b) {
    const std::size_t ra = spanRank(a);
    if (ra != spanRank(b)) return false;
    std::vector<RationalMatrix> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return spanRank(both) == ra;
}

}  // namespace powsolve
