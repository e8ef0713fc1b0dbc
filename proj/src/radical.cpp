#include "powsolve/radical.hpp"

#include "powsolve/errors.hpp"
#include "powsolve/verify.hpp"

#include <algorithm>
#include <sstream>

namespace powsolve {

std::string Transform::describe() const {
    switch (kind) {
    case Kind::FactorZero: return "factor x^" + std::to_string(count);
    case Kind::Reversal: return "reverse x -> 1/x";
    case Kind::Shift: return "shift x -> x + " + powsolve::toString(shift);
    }
    return {};
}

int RootSet::totalMultiplicity() const {
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
}

std::vector<Complex> RootSet::values() const {
    std::vector<Complex> out;
    for (const auto& r : roots) {
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    }
    return out;
}

const char* toString(EquationClassTag tag) {
    switch (tag) {
    case EquationClassTag::PerfectPower: return "PerfectPower";
    case EquationClassTag::PowerPlusConstant: return "PowerPlusConstant";
    case EquationClassTag::ConstantTimesPowerPlusPower: return "ConstantTimesPowerPlusPower";
    case EquationClassTag::SumOfTwoPowers: return "SumOfTwoPowers";
    case EquationClassTag::LinearTimesPowerD1: return "LinearTimesPowerD1";
    case EquationClassTag::NoNontrivialCenter: return "NoNontrivialCenter";
    }
    return "?";
}

namespace {

using powsolve::toString;

std::string str(const Rational& r) { return toString(r); }

std::string call(const std::string& name, std::initializer_list<std::string> args) {
    std::string out = name + "(";
    bool first = true;
    for (const auto& a : args) {
        if (!first) out += ",";
        out += a;
        first = false;
    }
    return out + ")";
}

/// Prefix form of a + b*sqrt(delta).
std::string exprOf(const ExactScalar& x) {
    if (x.isRational()) return str(x.rational());
    std::string radical = call("sqrt", {str(x.radicand())});
    if (x.radicalPart() != 1) radical = call("mul", {str(x.radicalPart()), radical});
    if (x.rationalPart() == 0) return radical;
    return call("add", {str(x.rationalPart()), radical});
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

/// zeta^j when it is real.
std::optional<int> realUnit(int d, long j) {
    long m = ((j % d) + d) % d;
    if (m == 0) return 1;
    if (2 * m == d) return -1;
    return std::nullopt;
}

long reduce(long j, int d) { return ((j % d) + d) % d; }

struct Pivoted {
    UnivariateEquation eq;
    std::vector<Transform> transforms;
};

/// A transformed equation with D1 != 0: the reversal first, then the shifts 1, -1, 2, -2, ...
std::optional<Pivoted> restorePivot(const UnivariateEquation& eq) {
    int d = eq.degree();
    if (eq.plain(d) != 0) {
        auto rev = reversed(eq);
        if (centerInvariants(rev.normCoeffs()).d1 != 0) return Pivoted{rev, {Transform{Transform::Kind::Reversal}}};
    }
    for (int step = 1; step <= 8; ++step) {
        Rational c = (step % 2 == 1) ? Rational((step + 1) / 2) : Rational(-(step / 2));
        auto g = shifted(eq, c);
        if (centerInvariants(g.normCoeffs()).d1 != 0) {
            Transform t{Transform::Kind::Shift};
            t.shift = c;
            return Pivoted{g, {t}};
        }
    }
    return std::nullopt;
}

/// Maps a root of the transformed equation back to the original variable.
void mapBack(RadicalRoot& root, const std::vector<Transform>& transforms, unsigned bits) {
    for (auto it = transforms.rbegin(); it != transforms.rend(); ++it) {
        switch (it->kind) {
        case Transform::Kind::Reversal:
            root.value = Complex(Rational(1), bits) / root.value;
            if (root.exact) root.exact = 1 / *root.exact;
            root.expr = call("inv", {root.expr});
            root.pretty = "1/" + paren(root.pretty);
            break;
        case Transform::Kind::Shift:
            root.value = root.value + Complex(it->shift, bits);
            if (root.exact) root.exact = *root.exact + it->shift;
            root.expr = call("add", {root.expr, str(it->shift)});
            root.pretty = paren(root.pretty) + " + " + str(it->shift);
            break;
        case Transform::Kind::FactorZero:
            break;
        }
    }
}

RadicalRoot exactRoot(const Rational& value, int multiplicity, unsigned bits) {
    RadicalRoot r;
    r.expr = str(value);
    r.pretty = str(value);
    r.exact = value;
    r.value = Complex(value, bits);
    r.multiplicity = multiplicity;
    return r;
}

RadicalRoot fromScalar(const ExactScalar& x, unsigned bits) {
    RadicalRoot r;
    r.expr = exprOf(x);
    r.pretty = x.toString();
    if (x.isRational()) r.exact = x.rational();
    r.value = x.approx(bits);
    return r;
}

bool ratioRankAtMostOne(const std::vector<Rational>& a, int from, int to) {
    for (int i = from; i <= to; ++i) {
        for (int j = i + 1; j <= to; ++j) {
            if (a[i] * a[j + 1] != a[i + 1] * a[j]) return false;
        }
    }
    return true;
}

/// Roots -t + rho zeta^j of a0 (x + t)^d + gamma.
std::vector<RadicalRoot> powerPlusConstantRoots(const EquationClass& cls, int d, const SolveOptions& options,
                                                unsigned bits) {
    Rational radicand = -cls.gamma / cls.leading;
    auto exactRho = powsolve::exactRoot(radicand, static_cast<unsigned>(d));
    Complex rho = exactRho ? Complex(*exactRho, bits) : principalRoot(Complex(radicand, bits), static_cast<unsigned>(d));
    std::string rhoExpr = exactRho ? str(*exactRho) : call("root", {str(radicand), std::to_string(d)});
    std::string rhoPretty = exactRho ? str(*exactRho) : paren(str(radicand)) + "^(1/" + std::to_string(d) + ")";
    Complex shift(cls.shift, bits);

    std::vector<RadicalRoot> out;
    for (int i = 0; i < d; ++i) {
        long j = reduce(i + options.branchShift, d);
        RadicalRoot r;
        auto unit = realUnit(d, j);
        if (exactRho && unit) {
            r = exactRoot(*exactRho * *unit - cls.shift, 1, bits);
        } else {
            r.value = rho * unitRoot(static_cast<unsigned>(d), j, bits) - shift;
        }
        r.expr = call("sub", {call("mul", {rhoExpr, call("zeta", {std::to_string(d), std::to_string(j)})}), str(cls.shift)});
        r.pretty = rhoPretty + "*zeta" + std::to_string(d) + "^" + std::to_string(j) + " - " + paren(str(cls.shift));
        out.push_back(std::move(r));
    }
    return out;
}

/// a0 (x - r)^(d-1) (x - s) with r = -D2/(2 D1) and s = (d-1) D2/(2 D1) - d a1/a0.
std::pair<Rational, Rational> repeatedRootPair(const UnivariateEquation& eq) {
    auto inv = centerInvariants(eq.normCoeffs());
    int d = eq.degree();
    Rational r = -inv.d2 / (2 * inv.d1);
    Rational s = Rational(d - 1) * inv.d2 / (2 * inv.d1) - Rational(d) * eq.norm(1) / eq.norm(0);
    return {r, s};
}

std::vector<RadicalRoot> repeatedRoots(const UnivariateEquation& eq, unsigned bits) {
    auto [r, s] = repeatedRootPair(eq);
    int d = eq.degree();
    if (r == s) return {exactRoot(r, d, bits)};
    auto inv = centerInvariants(eq.normCoeffs());
    RadicalRoot rr = exactRoot(r, d - 1, bits);
    rr.pretty = "-(" + str(inv.d2) + ")/(2*" + paren(str(inv.d1)) + ")";
    RadicalRoot sr = exactRoot(s, 1, bits);
    return {rr, sr};
}

/// Annotates roots that coincide with a rational root of eq.
void promote(const UnivariateEquation& eq, RootSet& set) {
    bool pending = std::any_of(set.roots.begin(), set.roots.end(), [](const RadicalRoot& r) { return !r.exact; });
    if (!pending) return;
    auto rationals = rationalRoots(eq);
    for (auto& root : set.roots) {
        if (root.exact) continue;
        for (const auto& q : rationals) {
            Complex diff = root.value - Complex(q, root.value.bits());
            double scale = std::max(1.0, std::abs(q.get_d()));
            if (abs(diff).toDouble() <= 1e-8 * scale) {
                root.exact = q;
                break;
            }
        }
    }
}

std::vector<RadicalRoot> quadraticRoots(const UnivariateEquation& eq, unsigned bits) {
    const Rational& b0 = eq.plain(0);
    const Rational& b1 = eq.plain(1);
    const Rational& b2 = eq.plain(2);
    Rational disc = b1 * b1 - 4 * b0 * b2;
    if (disc == 0) return {exactRoot(-b1 / (2 * b0), 2, bits)};
    ExactScalar sq = ExactScalar::sqrtOf(disc);
    std::vector<RadicalRoot> out;
    for (int sign : {1, -1}) {
        ExactScalar x = (ExactScalar(-b1) + ExactScalar(static_cast<long>(sign)) * sq) / ExactScalar(2 * b0);
        RadicalRoot r = fromScalar(x, bits);
        std::string op = sign > 0 ? "add" : "sub";
        r.expr = call("div", {call(op, {str(-b1), call("sqrt", {str(disc)})}), str(2 * b0)});
        r.pretty = "(" + str(-b1) + (sign > 0 ? " + " : " - ") + "sqrt(" + str(disc) + "))/" + paren(str(2 * b0));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RadicalRoot> lowDegreeRoots(const UnivariateEquation& eq, unsigned bits, std::string& method) {
    switch (eq.degree()) {
    case 0: method = "constant"; return {};
    case 1: method = "linear"; return {exactRoot(-eq.plain(1) / eq.plain(0), 1, bits)};
    default: method = "quadratic"; return quadraticRoots(eq, bits);
    }
}

ExactScalar evaluateBinary(const BinaryForm& f, const ExactScalar& x, const ExactScalar& y) {
    int d = f.degree();
    ExactScalar total;
    for (int i = 0; i <= d; ++i) {
        if (f.norm(i) == 0) continue;
        total += ExactScalar(binomial(d, i) * f.norm(i)) * pow(x, static_cast<unsigned>(d - i)) * pow(y, static_cast<unsigned>(i));
    }
    return total;
}

/// Scales the form so its first nonzero coefficient is 1; the coefficient absorbs u^d.
PowerSummand normalizedSummand(ExactScalar coefficient, std::vector<ExactScalar> form, int d) {
    for (const auto& c : form) {
        if (c.isZero()) continue;
        ExactScalar lead = c;
        for (auto& x : form) x = x / lead;
        coefficient = coefficient * pow(lead, static_cast<unsigned>(d));
        break;
    }
    return PowerSummand{coefficient, LinearForm{std::move(form)}};
}

std::size_t firstNonzeroIndex(const LinearForm& l) {
    for (std::size_t i = 0; i < l.coefficients.size(); ++i) {
        if (!l.coefficients[i].isZero()) return i;
    }
    return l.coefficients.size();
}

/// Two-powers decomposition of a binary form whose center has rank-2 system matrix.
PowerSumDecomposition twoPowerDecomposition(const BinaryForm& f) {
    int d = f.degree();
    auto system = binaryCenterSystem(f);
    auto kernel = nullspace(system);
    if (kernel.size() != 1) {
        int r = static_cast<int>(rank(system));
        if (d == 3) throw RepeatedEigenvalue("the form is a perfect cube; D2^2 - 4 D1 D3 = 0");
        throw CenterRankError(r, "center system has rank " + std::to_string(r) + ", expected 2");
    }
    const Rational& c12 = kernel[0][0];
    const Rational& s = kernel[0][1];
    const Rational& c21 = kernel[0][2];
    Rational disc = s * s + 4 * c12 * c21;
    if (disc == 0) throw RepeatedEigenvalue("center generator has a repeated eigenvalue");

    PowerSumDecomposition dec;
    dec.degree = d;
    auto inv = centerInvariants(f.normCoeffs());
    if (inv.d1 != 0) {
        auto gen = centerGenerator(f);
        ExactScalar a0(f.norm(0)), a1(f.norm(1)), d1(gen.d1);
        ExactScalar c1 = (gen.lambda2 * a0 - d1 * a1) / (gen.lambda2 - gen.lambda1);
        ExactScalar c2 = (gen.lambda1 * a0 - d1 * a1) / (gen.lambda1 - gen.lambda2);
        dec.summands.push_back({c1, LinearForm{{ExactScalar(1L), gen.lambda1 / d1}}});
        dec.summands.push_back({c2, LinearForm{{ExactScalar(1L), gen.lambda2 / d1}}});
        return dec;
    }

    // Eigenvectors of X = [[0, c12], [c21, s]] give P with F(P u) diagonal.
    ExactScalar root = ExactScalar::sqrtOf(disc);
    ExactScalar half(Rational(1, 2));
    std::array<ExactScalar, 2> mu{(ExactScalar(s) + root) * half, (ExactScalar(s) - root) * half};
    std::array<std::array<ExactScalar, 2>, 2> w;
    for (int i = 0; i < 2; ++i) {
        if (c12 != 0) {
            w[i] = {ExactScalar(c12), mu[i]};
        } else if (c21 != 0) {
            w[i] = {mu[i] - ExactScalar(s), ExactScalar(c21)};
        } else {
            w[i] = mu[i].isZero() ? std::array<ExactScalar, 2>{ExactScalar(1L), ExactScalar(0L)}
                                  : std::array<ExactScalar, 2>{ExactScalar(0L), ExactScalar(1L)};
        }
    }
    ExactScalar det = w[0][0] * w[1][1] - w[1][0] * w[0][1];
    std::array<std::vector<ExactScalar>, 2> rows{
        std::vector<ExactScalar>{w[1][1] / det, -w[1][0] / det},
        std::vector<ExactScalar>{-w[0][1] / det, w[0][0] / det},
    };
    for (int i = 0; i < 2; ++i) {
        ExactScalar c = evaluateBinary(f, w[i][0], w[i][1]);
        dec.summands.push_back(normalizedSummand(c, rows[i], d));
    }
    std::stable_sort(dec.summands.begin(), dec.summands.end(), [](const PowerSummand& a, const PowerSummand& b) {
        return firstNonzeroIndex(a.form) < firstNonzeroIndex(b.form);
    });
    return dec;
}

std::vector<RadicalRoot> complexRootsOfQuadratic(const Complex& b, const Complex& c, unsigned bits) {
    // y^2 + b y + c
    Complex disc = b * b - Complex(Rational(4), bits) * c;
    Complex sq = sqrt(disc);
    Complex two(Rational(2), bits);
    RadicalRoot r1, r2;
    r1.value = (-b + sq) / two;
    r2.value = (-b - sq) / two;
    return {r1, r2};
}

}  // namespace

HankelMatrix hankel(const UnivariateEquation& eq) {
    int d = eq.degree();
    if (d < 2) throw DegreeError("Hankel matrix needs degree >= 2");
    HankelMatrix h;
    h.entries = RationalMatrix(static_cast<std::size_t>(d - 1), 3);
    for (int i = 0; i + 2 <= d; ++i) {
        for (int j = 0; j < 3; ++j) h.entries(i, j) = eq.norm(i + j);
    }
    h.rank = static_cast<int>(rank(h.entries));
    return h;
}

std::string EquationClass::describe() const {
    std::ostringstream os;
    os << toString(tag) << " (hankel rank " << hankelRank << ")";
    switch (tag) {
    case EquationClassTag::PerfectPower:
        os << ": " << str(leading) << "*(x + " << str(shift) << ")^d";
        break;
    case EquationClassTag::PowerPlusConstant:
        os << ": " << str(leading) << "*(x + " << str(shift) << ")^d + " << str(gamma);
        break;
    case EquationClassTag::ConstantTimesPowerPlusPower:
        os << ": " << str(gamma) << "*x^d + " << str(leading) << "*(" << str(scale) << "*x + 1)^d";
        break;
    case EquationClassTag::LinearTimesPowerD1:
        if (repeatedRoot && simpleRoot) {
            os << ": (x - (" << str(*repeatedRoot) << "))^(d-1) * (x - (" << str(*simpleRoot) << "))";
        }
        break;
    default: break;
    }
    return os.str();
}

EquationClass classify(const UnivariateEquation& eq) {
    int d = eq.degree();
    if (d < 3) throw DegreeError("classification needs degree >= 3, got " + std::to_string(d));
    const auto& a = eq.normCoeffs();
    EquationClass c;
    c.invariants = centerInvariants(a);
    auto h = hankel(eq);
    c.hankelRank = h.rank;
    if (h.rank == 2) {
        auto kernel = nullspace(binaryCenterSystem(BinaryForm(a)));
        const auto& v = kernel.at(0);
        c.centerDiscriminant = v[1] * v[1] + 4 * v[0] * v[2];
    }

    if (ratioRankAtMostOne(a, 0, d - 1)) {
        c.tag = EquationClassTag::PerfectPower;
        c.leading = a[0];
        c.shift = a[1] / a[0];
        return c;
    }
    if (ratioRankAtMostOne(a, 0, d - 2)) {
        c.tag = EquationClassTag::PowerPlusConstant;
        c.leading = a[0];
        c.shift = a[1] / a[0];
        c.gamma = a[d] - a[0] * pow(c.shift, static_cast<unsigned>(d));
        return c;
    }
    if (a[d] != 0 && ratioRankAtMostOne(a, 1, d - 1)) {
        c.tag = EquationClassTag::ConstantTimesPowerPlusPower;
        c.leading = a[d];
        c.scale = a[d - 1] / a[d];
        c.gamma = a[0] - a[d] * pow(c.scale, static_cast<unsigned>(d));
        return c;
    }
    if (h.rank != 2) {
        c.tag = EquationClassTag::NoNontrivialCenter;
        return c;
    }
    if (*c.centerDiscriminant != 0) {
        c.tag = EquationClassTag::SumOfTwoPowers;
        return c;
    }
    c.tag = EquationClassTag::LinearTimesPowerD1;

    // Witness roots, read off a transformed equation when D1 = 0.
    UnivariateEquation g = eq;
    std::vector<Transform> transforms;
    if (c.invariants.d1 == 0) {
        auto pivoted = restorePivot(eq);
        if (!pivoted) return c;
        g = pivoted->eq;
        transforms = pivoted->transforms;
    }
    auto [r, s] = repeatedRootPair(g);
    RadicalRoot rr = exactRoot(r, d - 1, kDefaultBits);
    RadicalRoot sr = exactRoot(s, 1, kDefaultBits);
    mapBack(rr, transforms, kDefaultBits);
    mapBack(sr, transforms, kDefaultBits);
    c.repeatedRoot = rr.exact;
    c.simpleRoot = sr.exact;
    return c;
}

PowerSumDecomposition completeCube(const BinaryForm& form) {
    if (form.degree() != 3) throw DegreeError("completeCube needs a cubic, got degree " + std::to_string(form.degree()));
    return twoPowerDecomposition(form);
}

PowerSumDecomposition completePowers(const BinaryForm& form) {
    if (form.degree() == 3) return completeCube(form);
    if (form.degree() < 3) throw DegreeError("completePowers needs degree >= 3");
    return twoPowerDecomposition(form);
}

TwoPowerData twoPowerData(const UnivariateEquation& eq) {
    TwoPowerData data;
    data.degree = eq.degree();
    data.generator = centerGenerator(BinaryForm::homogenize(eq));
    if (data.generator.discriminant == 0) throw RepeatedEigenvalue("D2^2 - 4 D1 D3 = 0");
    data.a0 = eq.norm(0);
    data.a1 = eq.norm(1);
    const auto& g = data.generator;
    ExactScalar a0(data.a0), a1(data.a1), d1(g.d1);
    ExactScalar den = g.lambda1 * a0 - d1 * a1;
    if (den.isZero()) throw PivotError("lambda1 a0 - D1 a1 vanishes");
    data.radicand = (g.lambda2 * a0 - d1 * a1) / den;
    if (data.radicand.isRational()) {
        data.exactDelta = powsolve::exactRoot(data.radicand.rational(), static_cast<unsigned>(data.degree));
    }
    return data;
}

std::vector<RadicalRoot> twoPowerRoots(const TwoPowerData& data, const SolveOptions& options) {
    unsigned bits = options.bits + 32;
    int d = data.degree;
    const auto& g = data.generator;
    Complex delta = data.exactDelta ? Complex(*data.exactDelta, bits)
                                    : principalRoot(data.radicand.approx(bits), static_cast<unsigned>(d));
    Complex l1 = g.lambda1.approx(bits);
    Complex l2 = g.lambda2.approx(bits);
    Complex d1(g.d1, bits);
    Complex one(Rational(1), bits);

    std::string deltaExpr =
        data.exactDelta ? str(*data.exactDelta) : call("root", {exprOf(data.radicand), std::to_string(d)});
    std::string deltaPretty = data.exactDelta ? str(*data.exactDelta)
                                              : paren(data.radicand.toString()) + "^(1/" + std::to_string(d) + ")";

    std::vector<RadicalRoot> out;
    for (int i = 0; i < d; ++i) {
        long j = reduce(i + options.branchShift, d);
        std::string z = call("zeta", {std::to_string(d), std::to_string(j)});
        std::string w = call("mul", {deltaExpr, z});
        RadicalRoot r;
        auto unit = realUnit(d, j);
        if (data.exactDelta && unit) {
            Rational q = *data.exactDelta * *unit;
            if (q == 1) continue;  // root at infinity
            ExactScalar x = (ExactScalar(q) * g.lambda1 - g.lambda2) / (ExactScalar(g.d1) * ExactScalar(1 - q));
            r = fromScalar(x, bits);
        } else {
            Complex wz = delta * unitRoot(static_cast<unsigned>(d), j, bits);
            r.value = (wz * l1 - l2) / (d1 * (one - wz));
        }
        r.expr = call("div", {call("sub", {call("mul", {w, exprOf(g.lambda1)}), exprOf(g.lambda2)}),
                              call("mul", {str(g.d1), call("sub", {"1", w})})});
        std::string wp = deltaPretty + "*zeta" + std::to_string(d) + "^" + std::to_string(j);
        r.pretty = "(" + wp + "*" + paren(g.lambda1.toString()) + " - " + paren(g.lambda2.toString()) + ")/(" +
                   paren(str(g.d1)) + "*(1 - " + wp + "))";
        out.push_back(std::move(r));
    }
    return out;
}

RadicalSolution solveDetailed(const UnivariateEquation& eq, const SolveOptions& options) {
    unsigned bits = options.bits + 32;
    RadicalSolution sol;
    RootSet& set = sol.roots;
    set.degree = eq.degree();

    int d = eq.degree();
    int zeros = 0;
    while (zeros < d && eq.plain(d - zeros) == 0) ++zeros;
    UnivariateEquation core = eq;
    if (zeros > 0) {
        std::vector<Rational> plain(eq.plainCoeffs().begin(), eq.plainCoeffs().end() - zeros);
        core = UnivariateEquation::fromPlainCoeffs(plain);
        Transform t{Transform::Kind::FactorZero};
        t.count = zeros;
        set.preTransforms.push_back(t);
        set.roots.push_back(exactRoot(Rational(0), zeros, bits));
    }

    std::vector<RadicalRoot> roots;
    std::vector<Transform> inner;
    std::string method;
    if (core.degree() < 3) {
        roots = lowDegreeRoots(core, bits, method);
        if (zeros > 0 && core.degree() == 0) method = "perfect-power";
    } else {
        sol.cls = classify(core);
        const auto& cls = *sol.cls;
        int dc = core.degree();
        switch (cls.tag) {
        case EquationClassTag::PerfectPower: {
            method = "perfect-power";
            RadicalRoot r = exactRoot(-cls.shift, dc, bits);
            roots.push_back(r);
            break;
        }
        case EquationClassTag::PowerPlusConstant:
            method = "power-plus-constant";
            roots = powerPlusConstantRoots(cls, dc, options, bits);
            break;
        case EquationClassTag::ConstantTimesPowerPlusPower: {
            method = "constant-times-power-plus-power";
            auto rev = reversed(core);
            auto revCls = classify(rev);
            roots = powerPlusConstantRoots(revCls, dc, options, bits);
            inner.push_back(Transform{Transform::Kind::Reversal});
            break;
        }
        case EquationClassTag::NoNontrivialCenter:
            throw NoRadicalMethod("the center of the form is trivial (Hankel rank " + std::to_string(cls.hankelRank) +
                                  ")" + (dc == 4 ? "; the quartic resolvent path applies" : ""));
        case EquationClassTag::SumOfTwoPowers:
        case EquationClassTag::LinearTimesPowerD1: {
            UnivariateEquation g = core;
            if (cls.invariants.d1 == 0) {
                auto pivoted = restorePivot(core);
                if (!pivoted) throw PivotError("D1 = 0 and no reversal or shift restores a nonzero pivot");
                g = pivoted->eq;
                inner = pivoted->transforms;
            }
            if (cls.tag == EquationClassTag::SumOfTwoPowers) {
                method = "two-powers";
                sol.twoPowers = twoPowerData(g);
                roots = twoPowerRoots(*sol.twoPowers, options);
                if (static_cast<int>(roots.size()) < dc) set.notes.push_back("one root lies at infinity");
            } else {
                method = "linear-times-power";
                roots = repeatedRoots(g, bits);
            }
            break;
        }
        }
    }
    for (auto& r : roots) {
        mapBack(r, inner, bits);
        set.roots.push_back(std::move(r));
    }
    set.preTransforms.insert(set.preTransforms.end(), inner.begin(), inner.end());
    set.method = method;
    promote(eq, set);
    return sol;
}

RootSet solveByRadicals(const UnivariateEquation& eq, const SolveOptions& options) {
    return solveDetailed(eq, options).roots;
}

RootSet cardano(const Rational& p, const Rational& q, unsigned bits) {
    unsigned work = bits + 32;
    RootSet set;
    set.degree = 3;
    set.method = "cardano";
    auto eq = UnivariateEquation::fromPlainCoeffs({Rational(1), Rational(0), p, q});
    if (p == 0 && q == 0) {
        set.roots.push_back(exactRoot(Rational(0), 3, work));
        return set;
    }
    Rational disc = q * q / 4 + p * p * p / 27;
    if (p != 0 && q != 0 && disc == 0) {
        RadicalRoot dbl = exactRoot(-3 * q / (2 * p), 2, work);
        dbl.pretty = "-3*" + paren(str(q)) + "/(2*" + paren(str(p)) + ")";
        RadicalRoot single = exactRoot(3 * q / p, 1, work);
        single.pretty = "3*" + paren(str(q)) + "/" + paren(str(p));
        set.roots = {dbl, single};
        return set;
    }
    if (p == 0) {
        auto exact = powsolve::exactRoot(-q, 3);
        Complex c = exact ? Complex(*exact, work) : principalRoot(Complex(Rational(-q), work), 3);
        std::string ce = exact ? str(*exact) : call("root", {str(-q), "3"});
        for (long k = 0; k < 3; ++k) {
            RadicalRoot r;
            if (k == 0 && exact) {
                r = exactRoot(*exact, 1, work);
            } else {
                r.value = c * unitRoot(3, k, work);
            }
            r.expr = call("mul", {ce, call("zeta", {"3", std::to_string(k)})});
            r.pretty = "cbrt(" + str(-q) + ")*zeta3^" + std::to_string(k);
            set.roots.push_back(std::move(r));
        }
        promote(eq, set);
        return set;
    }
    if (q == 0) {
        set.roots.push_back(exactRoot(Rational(0), 1, work));
        ExactScalar s = ExactScalar::sqrtOf(-p);
        for (int sign : {1, -1}) {
            ExactScalar x = ExactScalar(static_cast<long>(sign)) * s;
            RadicalRoot r = fromScalar(x, work);
            r.expr = sign > 0 ? call("sqrt", {str(-p)}) : call("neg", {call("sqrt", {str(-p)})});
            r.pretty = std::string(sign > 0 ? "" : "-") + "sqrt(" + str(-p) + ")";
            set.roots.push_back(std::move(r));
        }
        return set;
    }

    ExactScalar s = ExactScalar::sqrtOf(disc);
    ExactScalar inner = ExactScalar(-q / 2) + s;
    Complex u = principalRoot(inner.approx(work), 3);
    Complex v = Complex(Rational(-p), work) / (Complex(Rational(3), work) * u);
    Complex w = unitRoot(3, 1, work);
    Complex w2 = unitRoot(3, 2, work);
    std::string ue = call("root", {exprOf(inner), "3"});
    std::string ve = call("div", {str(-p), call("mul", {"3", ue})});
    std::string up = "cbrt(" + inner.toString() + ")";
    std::string vp = paren(str(-p)) + "/(3*" + up + ")";
    std::array<std::pair<Complex, Complex>, 3> terms{std::pair{u, v}, std::pair{w * u, w2 * v}, std::pair{w2 * u, w * v}};
    std::array<std::pair<std::string, std::string>, 3> zs{std::pair{std::string("0"), std::string("0")},
                                                          std::pair{std::string("1"), std::string("2")},
                                                          std::pair{std::string("2"), std::string("1")}};
    for (int k = 0; k < 3; ++k) {
        RadicalRoot r;
        r.value = terms[k].first + terms[k].second;
        if (k == 0) {
            r.expr = call("add", {ue, ve});
            r.pretty = up + " + " + vp;
        } else {
            r.expr = call("add", {call("mul", {call("zeta", {"3", zs[k].first}), ue}),
                                  call("mul", {call("zeta", {"3", zs[k].second}), ve})});
            r.pretty = "zeta3^" + zs[k].first + "*" + up + " + zeta3^" + zs[k].second + "*" + vp;
        }
        set.roots.push_back(std::move(r));
    }
    promote(eq, set);
    return set;
}

DepressedQuartic depressQuartic(const UnivariateEquation& eq) {
    if (eq.degree() != 4) throw DegreeError("depressQuartic needs degree 4, got " + std::to_string(eq.degree()));
    auto m = monic(eq);
    DepressedQuartic g;
    g.shift = m.plain(1) / 4;
    auto y = shifted(m, -g.shift);
    g.p = y.plain(2);
    g.q = y.plain(3);
    g.r = y.plain(4);
    return g;
}

std::vector<Rational> resolventCubic(const DepressedQuartic& g) {
    return {Rational(8), -4 * g.p, -8 * g.r, 4 * g.p * g.r - g.q * g.q};
}

ResolventData solveResolvent(const DepressedQuartic& g, unsigned bits) {
    unsigned work = bits + 32;
    ResolventData data;
    auto cubic = UnivariateEquation::fromPlainCoeffs(resolventCubic(g));
    auto rationals = rationalRoots(cubic);

    // Prefer a rational alpha that makes both factors rational, then the largest one.
    std::optional<Rational> chosen;
    bool chosenRational = false;
    for (const auto& alpha : rationals) {
        Rational b2 = 2 * alpha - g.p;
        bool rationalFactors = b2 == 0 ? isSquare(alpha * alpha - g.r) : isSquare(b2);
        if (!chosen || (rationalFactors && !chosenRational) || (rationalFactors == chosenRational && alpha > *chosen)) {
            chosen = alpha;
            chosenRational = rationalFactors;
        }
    }

    Complex i(Real(0L, work), Real(1L, work));
    if (chosen) {
        const Rational& alpha = *chosen;
        data.alphaExact = alpha;
        data.alpha = Complex(alpha, work);
        ExactScalar b = ExactScalar::sqrtOf(2 * alpha - g.p);
        ExactScalar c = b.isZero() ? ExactScalar::sqrtOf(alpha * alpha - g.r) : ExactScalar(-g.q) / (ExactScalar(2L) * b);
        data.factorB = b;
        data.factorC = c;
        data.beta = Complex(Rational(0), work) - i * b.approx(work);
        data.gamma = Complex(Rational(0), work) - i * c.approx(work);
        return data;
    }

    // alpha = t + p/6 with t a root of the depressed resolvent.
    auto monicCubic = monic(cubic);
    auto depressed = shifted(monicCubic, g.p / 6);
    auto roots = cardano(depressed.plain(2), depressed.plain(3), work);
    auto values = roots.values();
    if (values.empty()) throw ResolventFailure("resolvent cubic has no roots");
    auto best = std::max_element(values.begin(), values.end(),
                                 [](const Complex& a, const Complex& b) { return a.re() < b.re(); });
    Complex alpha = *best + Complex(Rational(g.p / 6), work);
    if (!alpha.isFinite()) throw ResolventFailure("resolvent root is not finite");
    data.alpha = alpha;
    Complex bb = sqrt(Complex(Rational(2), work) * alpha - Complex(g.p, work));
    Complex cc = abs(bb) <= epsilon(work / 2)
                     ? sqrt(alpha * alpha - Complex(g.r, work))
                     : Complex(Rational(-g.q), work) / (Complex(Rational(2), work) * bb);
    data.beta = Complex(Rational(0), work) - i * bb;
    data.gamma = Complex(Rational(0), work) - i * cc;
    return data;
}

RootSet solveQuarticByTwoSquares(const UnivariateEquation& eq, unsigned bits) {
    unsigned work = bits + 32;
    auto g = depressQuartic(eq);
    auto res = solveResolvent(g, bits);
    Complex i(Real(0L, work), Real(1L, work));
    Complex b = res.factorB ? res.factorB->approx(work) : i * res.beta;
    Complex c = res.factorC ? res.factorC->approx(work) : i * res.gamma;

    RootSet set;
    set.degree = 4;
    set.method = "quartic-two-squares";
    std::string alphaText = res.alphaExact ? str(*res.alphaExact) : res.alpha.toString(25);
    std::string bText = res.factorB ? res.factorB->toString() : b.toString(25);
    std::string cText = res.factorC ? res.factorC->toString() : c.toString(25);
    set.notes.push_back("alpha = " + alphaText);
    set.notes.push_back("factors: (y^2 + (" + bText + ")*y + " + alphaText + " + (" + cText + "))*(y^2 - (" + bText +
                        ")*y + " + alphaText + " - (" + cText + "))");
    if (g.shift != 0) set.notes.push_back("x = y - " + str(g.shift));

    Complex shift(g.shift, work);
    for (int sign : {1, -1}) {
        Complex sb = sign > 0 ? b : -b;
        Complex sc = sign > 0 ? res.alpha + c : res.alpha - c;
        auto pair = complexRootsOfQuadratic(sb, sc, work);
        for (std::size_t k = 0; k < pair.size(); ++k) {
            auto& r = pair[k];
            r.value = r.value - shift;
            std::string bs = sign > 0 ? "B" : "neg(B)";
            std::string cs = sign > 0 ? "add(alpha,C)" : "sub(alpha,C)";
            std::string root = call("sqrt", {call("sub", {call("mul", {bs, bs}), call("mul", {"4", cs})})});
            r.expr = call("sub", {call("div", {call(k == 0 ? "add" : "sub", {call("neg", {bs}), root}), "2"}), str(g.shift)});
            r.pretty = "root " + std::to_string(k + 1) + " of y^2 " + (sign > 0 ? "+" : "-") + " B*y + alpha " +
                       (sign > 0 ? "+" : "-") + " C, B = " + bText + ", C = " + cText + ", alpha = " + alphaText;
            set.roots.push_back(std::move(r));
        }
    }
    promote(eq, set);
    return set;
}

ReversalResult reversalTransform(const UnivariateEquation& eq) {
    int d = eq.degree();
    int zeros = 0;
    while (zeros < d && eq.plain(d - zeros) == 0) ++zeros;
    std::vector<Rational> plain(eq.plainCoeffs().begin(), eq.plainCoeffs().end() - zeros);
    std::reverse(plain.begin(), plain.end());
    return {UnivariateEquation::fromPlainCoeffs(plain), zeros};
}

}  // namespace powsolve
