#pragma once

// Reference computations the tests compare the library against. Each one takes a different
// route from the code under test: direct sums instead of elimination tricks, point evaluation
// instead of symbolic identities, double precision instead of MPFR.

#include "powsolve/exact_scalar.hpp"
#include "powsolve/form.hpp"
#include "powsolve/numeric.hpp"
#include "powsolve/rational.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using powsolve::ExactScalar;
using powsolve::Rational;
using cplx = std::complex<double>;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    long nonzero(long lo, long hi) {
        for (;;) {
            long v = integer(lo, hi);
            if (v != 0) return v;
        }
    }

    Rational rational(long maxNum, long maxDen) {
        Rational r(integer(-maxNum, maxNum), integer(1, maxDen));
        r.canonicalize();
        return r;
    }

    Rational nonzeroRational(long maxNum, long maxDen) {
        for (;;) {
            Rational r = rational(maxNum, maxDen);
            if (r != 0) return r;
        }
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline cplx toStd(const powsolve::Complex& z) { return {z.re().toDouble(), z.im().toDouble()}; }

inline std::vector<cplx> toStd(const std::vector<powsolve::Complex>& zs) {
    std::vector<cplx> out;
    for (const auto& z : zs) out.push_back(toStd(z));
    return out;
}

/// a_i = sum_k c_k m_k^i: binomial-scaled coefficients of sum_k c_k (x + m_k y)^d.
inline std::vector<ExactScalar> plantedNorm(const std::vector<std::pair<ExactScalar, ExactScalar>>& summands, int d) {
    std::vector<ExactScalar> a(static_cast<std::size_t>(d + 1));
    for (const auto& [c, m] : summands) {
        ExactScalar power(1L);
        for (int i = 0; i <= d; ++i) {
            a[static_cast<std::size_t>(i)] += c * power;
            power = power * m;
        }
    }
    return a;
}

/// Rational version, for planted data that stays in Q.
inline std::vector<Rational> plantedNormRational(const std::vector<std::pair<Rational, Rational>>& summands, int d) {
    std::vector<Rational> a(static_cast<std::size_t>(d + 1));
    for (const auto& [c, m] : summands) {
        Rational power = 1;
        for (int i = 0; i <= d; ++i) {
            a[static_cast<std::size_t>(i)] += c * power;
            power *= m;
        }
    }
    return a;
}

/// Plain coefficients of lead * prod (x - r_i), leading first.
inline std::vector<Rational> expandRoots(const std::vector<Rational>& roots, const Rational& lead = 1) {
    std::vector<Rational> p{lead};
    for (const auto& r : roots) {
        std::vector<Rational> next(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i];
            next[i + 1] -= p[i] * r;
        }
        p = std::move(next);
    }
    return p;
}

/// Plain-textbook Gaussian elimination over Q.
inline int gaussRank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const auto& pr = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
            Rational factor = rows[r][c] / pr[c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= factor * pr[k];
        }
        ++rank;
    }
    return rank;
}

/// Hessian of f at a rational point, straight from the monomial list.
inline std::vector<std::vector<Rational>> hessianAt(const powsolve::NAryForm& f, const std::vector<Rational>& p) {
    const int n = f.variables();
    std::vector<std::vector<Rational>> h(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto ex = e;
                Rational factor = ex[static_cast<std::size_t>(i)];
                if (factor == 0) continue;
                ex[static_cast<std::size_t>(i)] -= 1;
                factor *= ex[static_cast<std::size_t>(j)];
                if (factor == 0) continue;
                ex[static_cast<std::size_t>(j)] -= 1;
                Rational term = factor * c.rational();
                for (int k = 0; k < n; ++k) term *= powsolve::pow(p[static_cast<std::size_t>(k)], static_cast<unsigned>(ex[static_cast<std::size_t>(k)]));
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += term;
            }
        }
    }
    return h;
}

/// H(p) X symmetric at `points` random points. HX - (HX)^T has entries of degree d - 2, so
/// agreement at many random points is overwhelming evidence of the identity.
inline bool centerMemberByEvaluation(const powsolve::NAryForm& f, const powsolve::RationalMatrix& x, Rng& rng,
                                     int points = 12) {
    const auto n = static_cast<std::size_t>(f.variables());
    for (int t = 0; t < points; ++t) {
        std::vector<Rational> p;
        for (std::size_t k = 0; k < n; ++k) p.push_back(rng.rational(50, 7));
        auto h = hessianAt(f, p);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Rational hij = 0;
                Rational hji = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    hij += h[i][k] * x(k, j);
                    hji += h[j][k] * x(k, i);
                }
                if (hij != hji) return false;
            }
        }
    }
    return true;
}

/// Horner in double precision.
inline cplx evaluate(const std::vector<Rational>& plain, cplx z) {
    cplx acc = 0;
    for (const auto& b : plain) acc = acc * z + b.get_d();
    return acc;
}

/// Largest distance of a greedy nearest-neighbour matching; infinity on size mismatch.
inline double matchDistance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0;
    for (const auto& z : a) {
        auto best = std::min_element(b.begin(), b.end(), [&](cplx u, cplx v) { return std::abs(u - z) < std::abs(v - z); });
        worst = std::max(worst, std::abs(*best - z));
        b.erase(best);
    }
    return worst;
}

}  // namespace oracle
