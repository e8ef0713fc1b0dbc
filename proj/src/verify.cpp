#include "powsolve/verify.hpp"

#include "powsolve/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace powsolve {

int OracleRootSet::totalMultiplicity() const {
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
}

std::vector<Complex> OracleRootSet::values() const {
    std::vector<Complex> out;
    for (const auto& r : roots)
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    return out;
}

namespace {

struct HornerResult {
    Complex value;
    Complex derivative;
    Real bound;  // sum |b_i| |z|^(d-i), for the rounding-error test
};

HornerResult horner(const std::vector<Complex>& coeffs, const std::vector<Real>& magnitudes, const Complex& z) {
    const unsigned bits = z.bits();
    Complex p(bits);
    Complex dp(bits);
    Real bound(bits);
    const Real r = abs(z);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        dp = dp * z + p;
        p = p * z + coeffs[i];
        bound = bound * r + magnitudes[i];
    }
    return {std::move(p), std::move(dp), std::move(bound)};
}

std::vector<OracleRoot> cluster(const std::vector<Complex>& raw, double tolerance) {
    const std::size_t n = raw.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (abs(raw[i] - raw[j]).toDouble() <= tolerance) parent[find(i)] = find(j);

    std::vector<OracleRoot> out;
    std::vector<std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (std::find(seen.begin(), seen.end(), root) != seen.end()) continue;
        seen.push_back(root);
        Complex sum(raw[i].bits());
        int count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (find(j) == root) {
                sum += raw[j];
                ++count;
            }
        const Real k(static_cast<long>(count), sum.bits());
        out.push_back({Complex(sum.re() / k, sum.im() / k), count});
    }
    return out;
}

}  // namespace

OracleRootSet numericRoots(const UnivariateEquation& eq, const OracleOptions& options) {
    const unsigned bits = options.bits;
    const int d = eq.degree();
    OracleRootSet out;
    out.bits = bits;
    if (d < 1) throw DegreeError("root finding needs degree >= 1");

    // Zero roots are exact; the relative stopping test below cannot certify them.
    std::vector<Rational> plain = eq.plainCoeffs();
    int zeros = 0;
    while (plain.back() == 0) {
        plain.pop_back();
        ++zeros;
    }
    if (zeros > 0) {
        OracleRootSet rest;
        if (zeros < d) rest = numericRoots(UnivariateEquation::fromPlainCoeffs(plain), options);
        rest.bits = bits;
        rest.converged = true;
        for (int k = 0; k < zeros; ++k) rest.raw.emplace_back(Rational(0), bits);
        rest.roots = cluster(rest.raw, options.clusterTolerance);
        return rest;
    }

    std::vector<Complex> coeffs;
    std::vector<Real> magnitudes;
    for (const auto& b : plain) {
        coeffs.emplace_back(b, bits);
        magnitudes.push_back(abs(Real(b, bits)));
    }

    // Starting circle: radius 1 + max |b_i / b_0| bounds every root.
    Real radius(1L, bits);
    {
        Real m(0L, bits);
        for (std::size_t i = 1; i < magnitudes.size(); ++i) m = max(m, magnitudes[i] / magnitudes[0]);
        radius += m;
    }
    const Real offset = (sqrt(Real(5L, bits)) - Real(1L, bits)) / Real(2L, bits);
    std::vector<Complex> z;
    for (int k = 0; k < d; ++k) {
        const Real angle = pi(bits) * Real(2L * k, bits) / Real(static_cast<long>(d), bits) + offset;
        z.push_back(polar(radius, angle));
    }

    const Real eps = epsilon(bits);
    const Real slack = Real(16L * (d + 1), bits) * eps;
    const Complex one(Real(1L, bits));
    std::vector<bool> done(static_cast<std::size_t>(d), false);
    int iteration = 0;
    int extraSweeps = 2;
    for (; iteration < options.maxIterations; ++iteration) {
        bool all = true;
        for (int k = 0; k < d; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            HornerResult h = horner(coeffs, magnitudes, z[ku]);
            if (abs(h.value) <= slack * h.bound) {
                done[ku] = true;
                continue;
            }
            done[ku] = false;
            all = false;
            if (h.derivative.re().isZero() && h.derivative.im().isZero()) {
                // Stationary point: nudge off it.
                z[ku] += Complex(Real(eps * Real(1024L, bits)), Real(eps * Real(512L, bits)));
                continue;
            }
            const Complex ratio = h.value / h.derivative;
            Complex sum(bits);
            for (int j = 0; j < d; ++j)
                if (j != k) sum += one / (z[ku] - z[static_cast<std::size_t>(j)]);
            const Complex w = ratio / (one - ratio * sum);
            if (w.isFinite()) z[ku] -= w;
        }
        if (all && extraSweeps-- <= 0) break;
    }
    out.iterations = iteration;
    out.converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
    if (!out.converged) {
        throw NonConvergence("root oracle did not converge in " + std::to_string(options.maxIterations) + " iterations");
    }

    // Newton polish, kept only when it lowers the residual.
    for (auto& root : z) {
        HornerResult h = horner(coeffs, magnitudes, root);
        if (h.derivative.re().isZero() && h.derivative.im().isZero()) continue;
        Complex candidate = root - h.value / h.derivative;
        if (candidate.isFinite() && abs(horner(coeffs, magnitudes, candidate).value) < abs(h.value)) root = candidate;
    }

    out.raw = z;
    out.roots = cluster(z, options.clusterTolerance);
    return out;
}

unsigned oracleBits(int degree, unsigned requested) {
    return std::max(requested, 64U + 32U * static_cast<unsigned>(std::max(degree, 1)));
}

OracleRootSet oracleRoots(const UnivariateEquation& eq, unsigned bits) {
    OracleOptions options;
    options.bits = oracleBits(eq.degree(), bits);
    return numericRoots(eq, options);
}

std::vector<Rational> rationalRoots(const UnivariateEquation& eq) {
    std::vector<Rational> found;
    std::vector<Rational> plain = eq.plainCoeffs();
    while (plain.size() > 1 && plain.back() == 0) {
        plain.pop_back();
        if (found.empty()) found.emplace_back(0);
    }
    if (plain.size() == 1) return found;

    const Integer scale = commonDenominator(plain);
    for (auto& b : plain) b *= scale;
    const UnivariateEquation reduced = UnivariateEquation::fromPlainCoeffs(plain);
    Integer lead = abs(plain.front().get_num());

    // A root p/q in lowest terms has q | lead, so lead * root is an integer.
    const auto size = static_cast<unsigned>(maxBits(plain));
    OracleOptions options;
    options.bits = oracleBits(reduced.degree(), 64) + 2U * size;
    options.maxIterations = 2000;
    const OracleRootSet numeric = numericRoots(reduced, options);
    const Real leadReal(Rational(lead), options.bits);
    for (const auto& root : numeric.roots) {
        if (abs(root.value.im()) > Real(1L, options.bits)) continue;
        const Integer numerator = (root.value.re() * leadReal).round();
        Rational candidate(numerator, lead);
        candidate.canonicalize();
        if (reduced(candidate) == 0 && std::find(found.begin(), found.end(), candidate) == found.end()) {
            found.push_back(candidate);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

RootComparison compareRootSets(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
    RootComparison report;
    if (a.size() != b.size()) {
        report.structuralFailure = true;
        report.maxDistance = std::numeric_limits<double>::infinity();
        report.message = "cardinality mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
        return report;
    }
    const std::size_t n = a.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dist[i][j] = abs(a[i] - b[j]).toDouble();

    std::vector<std::size_t> match(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j] && (best == n || dist[i][j] < dist[i][best])) best = j;
        used[best] = true;
        match[i] = best;
    }
    // Verification pass: swap partners while that lowers the worse of the two distances.
    for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k) {
                const double now = std::max(dist[i][match[i]], dist[k][match[k]]);
                const double swapped = std::max(dist[i][match[k]], dist[k][match[i]]);
                if (swapped < now) {
                    std::swap(match[i], match[k]);
                    improved = true;
                }
            }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (report.worstIndex < 0 || dist[i][match[i]] > report.maxDistance) {
            report.maxDistance = dist[i][match[i]];
            report.worstIndex = static_cast<int>(i);
        }
    }
    report.passed = report.maxDistance <= tol;
    std::ostringstream msg;
    msg << "max distance " << report.maxDistance;
    if (!report.passed) msg << " at root " << report.worstIndex << " exceeds " << tol;
    report.message = msg.str();
    return report;
}

RootComparison compareRootSets(const RootSet& a, const OracleRootSet& b, double tol) {
    return compareRootSets(a.values(), b.values(), tol);
}

double normalizedResidual(const UnivariateEquation& eq, const Complex& x) {
    const unsigned bits = x.bits();
    Real scale(0L, bits);
    for (const auto& b : eq.plainCoeffs()) scale = max(scale, abs(Real(b, bits)));
    Real r = max(Real(1L, bits), abs(x));
    Real denom = scale;
    for (int i = 0; i < eq.degree(); ++i) denom *= r;
    return (abs(evaluate(eq, x)) / denom).toDouble();
}

double maxNormalizedResidual(const UnivariateEquation& eq, const RootSet& roots) {
    double worst = 0;
    for (const auto& r : roots.roots) worst = std::max(worst, normalizedResidual(eq, r.value));
    return worst;
}

VietaDeviation vietaDeviation(const UnivariateEquation& eq, const std::vector<Complex>& roots) {
    const unsigned bits = roots.empty() ? kDefaultBits : roots.front().bits();
    const int d = eq.degree();
    const Rational expectedSum = -eq.plain(1) / eq.plain(0);
    Rational expectedProduct = eq.plain(d) / eq.plain(0);
    if (d % 2 == 1) expectedProduct = -expectedProduct;

    Complex sum(bits);
    Complex product(Real(1L, bits));
    Real sumScale(0L, bits);
    Real productScale(1L, bits);
    for (const auto& x : roots) {
        sum += x;
        product *= x;
        sumScale += abs(x);
        productScale *= abs(x);
    }
    VietaDeviation out;
    out.sum = (abs(sum - Complex(expectedSum, bits)) / max(Real(1L, bits), sumScale)).toDouble();
    out.product = (abs(product - Complex(expectedProduct, bits)) / max(Real(1L, bits), productScale)).toDouble();
    return out;
}

bool checkDecomposition(const NAryForm& f, const PowerSumDecomposition& dec) {
    if (dec.degree != f.degree()) return false;
    for (const auto& s : dec.summands)
        if (static_cast<int>(s.form.coefficients.size()) != f.variables()) return false;
    return expand(dec, f.variables()) == f;
}

bool checkDecomposition(const NAryForm& f, const NumericPowerSum& dec, double relTol, unsigned bits) {
    if (dec.degree != f.degree()) return false;
    for (const auto& s : dec.summands)
        if (static_cast<int>(s.form.size()) != f.variables()) return false;
    const auto expanded = expand(dec, f.variables(), bits);
    Real scale(0L, bits);
    for (const auto& [e, c] : f.terms()) scale = max(scale, abs(c.approx(bits)));
    const Real limit = Real(relTol, bits) * max(scale, Real(1e-300, bits));
    for (const auto& [e, value] : expanded) {
        const Complex diff = value - f.coefficient(e).approx(bits);
        if (abs(diff) > limit) return false;
    }
    return true;
}

}  // namespace powsolve
