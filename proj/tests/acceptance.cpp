// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "powsolve/center.hpp"
#include "powsolve/cli.hpp"
#include "powsolve/errors.hpp"
#include "powsolve/parse.hpp"
#include "powsolve/radical.hpp"
#include "powsolve/verify.hpp"

#include "support/oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace powsolve;

namespace {

// Tolerances and workload sizes.
constexpr double kOracleTol = 1e-10;       // criterion 1
constexpr double kClusterTol = 1e-6;       // criterion 2
constexpr double kMatchTol = 1e-9;         // criteria 4, 7, 9
constexpr double kVietaTol = 1e-9;         // criterion 10
constexpr double kTimeLimitSeconds = 1.0;  // criteria 1-3
constexpr unsigned kBits = 128;
constexpr int kCardanoCases = 100;
constexpr int kPlantedCases = 100;
constexpr int kCubicCases = 500;
constexpr int kQuarticCases = 100;
constexpr int kCenterForms = 50;
constexpr int kConjugations = 20;
constexpr std::uint64_t kSeed = 20261018;

struct Solved {
    UnivariateEquation eq;
    RootSet roots;
};

// Every RootSet produced below, for criterion 10.
std::vector<Solved> produced;
// Equations from criteria 1-5 that carry a delta, for criterion 9.
std::vector<UnivariateEquation> twoPowerEquations;

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

RootSet record(const UnivariateEquation& eq, RootSet rs) {
    produced.push_back({eq, rs});
    return rs;
}

double oracleDistance(const UnivariateEquation& eq, const RootSet& rs) {
    auto cmp = compareRootSets(rs, oracleRoots(eq, kBits), kClusterTol);
    return cmp.structuralFailure ? 1e300 : cmp.maxDistance;
}

std::string str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Check quintic() {
    Check c;
    double secs = timed([&] {
        auto eq = parsePolynomial("31*x^5 + 235*x^4 + 710*x^3 + 1070*x^2 + 805*x + 242").toUnivariate();
        auto sol = solveDetailed(eq, {kBits, 0});
        record(eq, sol.roots);
        twoPowerEquations.push_back(eq);
        const auto& inv = sol.cls->invariants;
        c.require(inv.d1 == -8 && inv.d2 == -20 && inv.d3 == -12, "D invariants");
        c.require(sol.twoPowers && sol.twoPowers->generator.lambda1 == ExactScalar(-8L) &&
                      sol.twoPowers->generator.lambda2 == ExactScalar(-12L),
                  "lambdas");
        c.require(sol.twoPowers && sol.twoPowers->exactDelta == Rational(1, 2), "delta");
        int exactMinusTwo = 0;
        for (const auto& r : sol.roots.roots) exactMinusTwo += r.exact && *r.exact == -2;
        c.require(exactMinusTwo == 1, "root -2 not exact");
        double dist = oracleDistance(eq, sol.roots);
        c.require(sol.roots.totalMultiplicity() == 5 && dist < kOracleTol, "oracle distance " + str(dist));
        c.detail = c.ok ? "oracle distance " + str(dist) : c.detail;
    });
    c.require(secs < kTimeLimitSeconds, "runtime " + str(secs) + " s");
    c.detail += ", " + str(secs) + " s";
    return c;
}

Check septic() {
    Check c;
    double secs = timed([&] {
        auto eq =
            parsePolynomial("x^7 - 8/3*x^6 + 11/4*x^5 - 5/4*x^4 + 5/48*x^3 + 1/8*x^2 - 3/64*x + 1/192").toUnivariate();
        auto sol = solveDetailed(eq, {kBits, 0});
        record(eq, sol.roots);
        c.require(sol.cls && sol.cls->invariants.d1 == Rational(-25, 1764), "D1");
        auto g = centerGenerator(BinaryForm::homogenize(eq));
        c.require(g.lambda1 == ExactScalar(Rational(25, 3528)) && g.lambda2 == ExactScalar(Rational(25, 3528)), "lambdas");
        bool half6 = false, third1 = false, allExact = true;
        for (const auto& r : sol.roots.roots) {
            allExact = allExact && r.exact.has_value();
            if (r.exact && *r.exact == Rational(1, 2) && r.multiplicity == 6) half6 = true;
            if (r.exact && *r.exact == Rational(-1, 3) && r.multiplicity == 1) third1 = true;
        }
        c.require(half6 && third1 && allExact && sol.roots.totalMultiplicity() == 7, "exact roots");
        auto orc = oracleRoots(eq, kBits);
        bool cluster6 = false;
        for (const auto& r : orc.roots)
            cluster6 = cluster6 || (r.multiplicity == 6 && std::abs(oracle::toStd(r.value) - 0.5) < kClusterTol);
        c.require(cluster6, "oracle cluster of 6 at 1/2");
    });
    c.require(secs < kTimeLimitSeconds, "runtime " + str(secs) + " s");
    if (c.ok) c.detail = str(secs) + " s";
    return c;
}

Check ternary() {
    Check c;
    double secs = timed([&] {
        const std::string text =
            "x1^3 + 3*x1^2*x2 + 3*x1^2*x3 + 3*x1*x2^2 + 6*x1*x2*x3 + 3*x1*x3^2 - x2^3 + 15*x2^2*x3 - 21*x2*x3^2 + 20*x3^3";
        // independent statement of the expected decomposition
        auto want = parsePolynomial("(x1 + x2 + x3)^3 - 2*(x2 - 2*x3)^3 + 3*x3^3").toForm();
        auto f = parsePolynomial(text).toForm();
        c.require(f == want, "input does not expand to the target");
        std::istringstream in;
        std::ostringstream out, err;
        int code = cli::runCommand({"decompose", text, "--format", "json"}, in, out, err);
        c.require(code == 0, "exit code " + std::to_string(code));
        if (code != 0) return;
        auto j = nlohmann::json::parse(out.str());
        PowerSumDecomposition dec;
        dec.degree = 3;
        for (const auto& s : j["summands"]) {
            LinearForm l;
            for (const auto& v : s["form_coefficients"]) l.coefficients.emplace_back(parseRational(v.get<std::string>()));
            dec.summands.push_back({ExactScalar(parseRational(s["coefficient"].get<std::string>())), l});
        }
        c.require(expand(dec, 3) == f, "expand-back");
        // same summands up to permutation and l -> u l with u^3 absorbed
        std::vector<std::pair<Rational, std::vector<Rational>>> target{{1, {1, 1, 1}}, {-2, {0, 1, -2}}, {3, {0, 0, 1}}};
        c.require(dec.summands.size() == 3, "summand count");
        for (const auto& [lambda, coeffs] : target) {
            bool found = false;
            for (const auto& s : dec.summands) {
                std::size_t k = 0;
                while (k < coeffs.size() && coeffs[k] == 0) ++k;
                Rational u = s.form.coefficients[k].rational() / coeffs[k];
                bool prop = true;
                for (std::size_t i = 0; i < coeffs.size(); ++i) prop = prop && s.form.coefficients[i].rational() == u * coeffs[i];
                found = found || (prop && s.coefficient.rational() * u * u * u == lambda);
            }
            c.require(found, "summand with coefficient " + toString(lambda));
        }
    });
    c.require(secs < kTimeLimitSeconds, "runtime " + str(secs) + " s");
    if (c.ok) c.detail = str(secs) + " s";
    return c;
}

Check cardanoEquivalence(oracle::Rng& rng) {
    Check c;
    double worst = 0;
    int done = 0;
    while (done < kCardanoCases) {
        Rational p = rng.nonzeroRational(30, 6), q = rng.nonzeroRational(30, 6);
        if (q * q / 4 + p * p * p / 27 == 0) continue;
        auto eq = UnivariateEquation::fromPlainCoeffs({1, 0, p, q});
        auto viaCenter = record(eq, solveByRadicals(eq, {kBits, 0}));
        auto viaCardano = record(eq, cardano(p, q, kBits));
        if (classify(eq).tag == EquationClassTag::SumOfTwoPowers) twoPowerEquations.push_back(eq);
        auto cmp = compareRootSets(viaCenter.values(), viaCardano.values(), kMatchTol);
        worst = std::max(worst, cmp.maxDistance);
        c.require(cmp.passed, "p=" + toString(p) + " q=" + toString(q) + ": " + cmp.message);
        ++done;
    }
    // Delta = 0 family: p = -3t^2, q = 2t^3
    for (int k = 0; k < 20; ++k) {
        Rational t = rng.nonzeroRational(12, 5);
        Rational p = -3 * t * t, q = 2 * t * t * t;
        auto eq = UnivariateEquation::fromPlainCoeffs({1, 0, p, q});
        Rational dbl = -3 * q / (2 * p), simple = 3 * q / p;
        for (const auto& rs : {record(eq, solveByRadicals(eq, {kBits, 0})), record(eq, cardano(p, q, kBits))}) {
            bool ok = rs.totalMultiplicity() == 3;
            for (const auto& r : rs.roots) {
                if (r.multiplicity == 2) ok = ok && r.exact && *r.exact == dbl;
                else ok = ok && r.exact && *r.exact == simple && r.multiplicity == 1;
            }
            c.require(ok, "Delta=0 family t=" + toString(t) + " via " + rs.method);
        }
    }
    if (c.ok) c.detail = "max distance " + str(worst);
    return c;
}

Check plantRecover(oracle::Rng& rng) {
    Check c;
    int done = 0;
    while (done < kPlantedCases) {
        const int d = static_cast<int>(rng.integer(3, 9));
        Rational l1 = rng.nonzeroRational(12, 4), l2 = rng.nonzeroRational(12, 4);
        Rational b1 = rng.nonzeroRational(10, 4), b2 = rng.nonzeroRational(10, 4);
        if (b1 == b2 || l1 + l2 == 0) continue;
        BinaryForm f(oracle::plantedNormRational({{l1, b1}, {l2, b2}}, d));
        auto eq = f.dehomogenize();
        auto tag = classify(eq).tag;
        c.require(tag == EquationClassTag::SumOfTwoPowers, eq.toString() + " classified " + toString(tag));
        auto dec = completePowers(f);
        c.require(expand(dec, 2) == NAryForm::fromBinary(f), "expand-back " + eq.toString());
        record(eq, solveByRadicals(eq, {kBits, 0}));
        twoPowerEquations.push_back(eq);
        ++done;
    }
    if (c.ok) c.detail = std::to_string(done) + " planted forms";
    return c;
}

Check cubicCriterion(oracle::Rng& rng) {
    Check c;
    int succeeded = 0, rejected = 0;
    for (int t = 0; t < kCubicCases; ++t) {
        std::vector<Rational> a;
        for (int i = 0; i < 4; ++i) a.emplace_back(rng.integer(-3, 3));
        if (a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0) a[0] = 1;
        BinaryForm f(a);
        const bool expected = centerInvariants(a).discriminant() != 0;
        bool ok = false;
        try {
            auto dec = completeCube(f);
            ok = expand(dec, 2) == NAryForm::fromBinary(f);
        } catch (const Error&) {
        }
        (ok ? succeeded : rejected)++;
        c.require(ok == expected, "misclassified a = (" + toString(a[0]) + ", " + toString(a[1]) + ", " + toString(a[2]) +
                                      ", " + toString(a[3]) + ")");
    }
    if (c.ok) c.detail = std::to_string(succeeded) + " completed, " + std::to_string(rejected) + " rejected";
    return c;
}

Check quartics(oracle::Rng& rng) {
    Check c;
    double worst = 0;
    for (int t = 0; t < kQuarticCases; ++t) {
        std::vector<Rational> plain{1};
        for (int i = 0; i < 4; ++i) plain.push_back(rng.rational(20, 4));
        auto eq = UnivariateEquation::fromPlainCoeffs(plain);
        auto rs = record(eq, solveQuarticByTwoSquares(eq, kBits));
        double dist = oracleDistance(eq, rs);
        worst = std::max(worst, dist);
        c.require(dist < kMatchTol, eq.toString() + " distance " + str(dist));
    }
    auto eq = parsePolynomial("y^4 - y^2 - 2*y - 1").toUnivariate();
    auto res = solveResolvent(depressQuartic(eq), kBits);
    c.require(res.alphaExact && *res.alphaExact == 0, "alpha != 0");
    c.require(res.factorB && res.factorC && res.factorB->isRational() && res.factorC->isRational(), "factors not rational");
    if (res.factorB && res.factorC && res.factorB->isRational() && res.factorC->isRational()) {
        Rational b = res.factorB->rational(), cc = res.factorC->rational();
        // y^2 + B y + alpha + C and y^2 - B y + alpha - C
        auto first = UnivariateEquation::fromPlainCoeffs({1, b, cc});
        auto second = UnivariateEquation::fromPlainCoeffs({1, -b, -cc});
        auto a = UnivariateEquation::fromPlainCoeffs({1, -1, -1}), bb = UnivariateEquation::fromPlainCoeffs({1, 1, 1});
        c.require((first == a && second == bb) || (first == bb && second == a), "factors differ from (y^2-y-1)(y^2+y+1)");
    }
    record(eq, solveQuarticByTwoSquares(eq, kBits));
    if (c.ok) c.detail = "max distance " + str(worst);
    return c;
}

Check centerProperties(oracle::Rng& rng) {
    Check c;
    for (int t = 0; t < kCenterForms; ++t) {
        const int n = static_cast<int>(rng.integer(2, 4));
        const int d = static_cast<int>(rng.integer(3, 4));
        RationalMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        do {
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rng.integer(-3, 3);
        } while (determinant(a) == 0);
        PowerSumDecomposition planted;
        planted.degree = d;
        for (int i = 0; i < n; ++i) {
            LinearForm l;
            for (int j = 0; j < n; ++j) l.coefficients.emplace_back(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            planted.summands.push_back({ExactScalar(rng.nonzeroRational(9, 3)), l});
        }
        auto f = expand(planted, n);
        auto z = computeCenter(f);
        const auto id = identityMatrix(static_cast<std::size_t>(n));
        auto withId = z.basis;
        withId.push_back(id);
        c.require(z.dim() == static_cast<std::size_t>(n), "dimension");
        c.require(spanRank(withId) == z.dim(), "identity not in span");
        for (const auto& x : z.basis) {
            c.require(inCenter(f, x), "exact membership");
            c.require(oracle::centerMemberByEvaluation(f, x, rng), "membership by evaluation");
            for (const auto& y : z.basis) c.require(x * y == y * x, "basis elements do not commute");
        }
        for (int k = 0; k < kConjugations; ++k) {
            RationalMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            do {
                for (std::size_t i = 0; i < p.rows(); ++i)
                    for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = rng.integer(-3, 3);
            } while (determinant(p) == 0);
            auto pinv = inverse(p);
            std::vector<RationalMatrix> conj;
            for (const auto& x : z.basis) conj.push_back(pinv * x * p);
            c.require(sameSpan(computeCenter(substitute(f, p)).basis, conj), "covariance");
        }
    }
    if (c.ok) c.detail = std::to_string(kCenterForms) + " forms x " + std::to_string(kConjugations) + " conjugations";
    return c;
}

// Root formula evaluated in double precision straight from the coefficients, for one choice
// of the d-th root delta * zeta^k.
std::vector<oracle::cplx> formulaRoots(const UnivariateEquation& eq, long k) {
    using oracle::cplx;
    const auto& a = eq.normCoeffs();
    const double a0 = a[0].get_d(), a1 = a[1].get_d(), a2 = a[2].get_d(), a3 = a[3].get_d();
    const double d1 = a0 * a2 - a1 * a1, d2 = a0 * a3 - a1 * a2, d3 = a1 * a3 - a2 * a2;
    const cplx root = std::sqrt(cplx(d2 * d2 - 4 * d1 * d3));
    const cplx l1 = (d2 + root) / 2.0, l2 = (d2 - root) / 2.0;
    const int d = eq.degree();
    const double pi = std::acos(-1.0);
    const cplx delta = std::pow((l2 * a0 - d1 * a1) / (l1 * a0 - d1 * a1), 1.0 / d) * std::polar(1.0, 2 * pi * k / d);
    std::vector<cplx> out;
    for (int i = 0; i < d; ++i) {
        cplx w = delta * std::polar(1.0, 2 * pi * i / d);
        out.push_back((w * l1 - l2) / (d1 * (1.0 - w)));
    }
    return out;
}

Check branchInvariance() {
    Check c;
    double worst = 0;
    for (const auto& eq : twoPowerEquations) {
        auto data = twoPowerData(eq);
        const int d = eq.degree();
        std::vector<Complex> base;
        for (const auto& r : twoPowerRoots(data, {kBits, 0}))
            for (int m = 0; m < r.multiplicity; ++m) base.push_back(r.value);
        auto baseStd = oracle::toStd(base);
        double scale = 1;
        for (const auto& z : baseStd) scale = std::max(scale, std::abs(z));
        for (long k = 0; k < d; ++k) {
            std::vector<Complex> other;
            for (const auto& r : twoPowerRoots(data, {kBits, k}))
                for (int m = 0; m < r.multiplicity; ++m) other.push_back(r.value);
            auto cmp = compareRootSets(base, other, kMatchTol);
            double independent = oracle::matchDistance(formulaRoots(eq, k), baseStd) / scale;
            worst = std::max({worst, cmp.maxDistance, independent});
            c.require(cmp.passed && independent < kMatchTol,
                      eq.toString() + " branch " + std::to_string(k) + " distance " + str(independent));
        }
    }
    if (c.ok) c.detail = std::to_string(twoPowerEquations.size()) + " equations, max distance " + str(worst);
    return c;
}

Check vieta() {
    Check c;
    double worst = 0;
    for (const auto& s : produced) {
        auto v = vietaDeviation(s.eq, s.roots);
        worst = std::max({worst, v.sum, v.product});
        c.require(v.sum < kVietaTol && v.product < kVietaTol, s.eq.toString() + " via " + s.roots.method);
    }
    if (c.ok) c.detail = std::to_string(produced.size()) + " root sets, max deviation " + str(worst);
    return c;
}

}  // namespace

int main() {
    oracle::Rng rng(kSeed);
    struct Criterion {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    std::vector<Criterion> criteria{
        {1, "quintic golden", quintic},
        {2, "degree-7 golden", septic},
        {3, "ternary cubic decompose", ternary},
        {4, "Cardano equivalence", [&] { return cardanoEquivalence(rng); }},
        {5, "plant and recover", [&] { return plantRecover(rng); }},
        {6, "cubic completion criterion", [&] { return cubicCriterion(rng); }},
        {7, "quartic resolvent path", [&] { return quartics(rng); }},
        {8, "center properties", [&] { return centerProperties(rng); }},
        {9, "branch invariance", branchInvariance},
        {10, "Vieta conservation", vieta},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Check result;
        try {
            result = cr.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        failures += !result.ok;
        std::printf("%s criterion %d (%s): %s\n", result.ok ? "PASS" : "FAIL", cr.id, cr.name, result.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
