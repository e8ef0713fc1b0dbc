#include "powsolve/cli.hpp"

#include "powsolve/center.hpp"
#include "powsolve/diagonalize.hpp"
#include "powsolve/errors.hpp"
#include "powsolve/parse.hpp"
#include "powsolve/radical.hpp"
#include "powsolve/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace powsolve::cli {

namespace {

using nlohmann::json;

constexpr double kRootTolerance = 1e-9;

/// Signals that the command ran but its own cross-check failed.
struct VerificationFailed {
    std::string message;
};

struct Output {
    json doc;
    std::string text;
    bool verificationFailed = false;
    std::string failure;
};

json exact(const Rational& r) { return toString(r); }

json exact(const ExactScalar& x) { return x.toString(); }

json matrixJson(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(toString(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string matrixText(const RationalMatrix& m, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << toString(m(i, j));
        os << "]\n";
    }
    return os.str();
}

std::string decimal(const Complex& z) { return z.toString(17); }

json invariantsJson(const std::vector<Rational>& norm, int hankelRank) {
    auto inv = centerInvariants(norm);
    return json{{"D1", exact(inv.d1)},
                {"D2", exact(inv.d2)},
                {"D3", exact(inv.d3)},
                {"discriminant", exact(inv.discriminant())},
                {"hankel_rank", hankelRank}};
}

std::string invariantsText(const std::vector<Rational>& norm, int hankelRank) {
    auto inv = centerInvariants(norm);
    return "D1 = " + toString(inv.d1) + ", D2 = " + toString(inv.d2) + ", D3 = " + toString(inv.d3) +
           ", D2^2 - 4*D1*D3 = " + toString(inv.discriminant()) + ", hankel rank " + std::to_string(hankelRank) + "\n";
}

std::string summandText(const PowerSummand& s, int degree, const std::vector<std::string>& names, bool first) {
    std::string form = "(" + s.form.toString(names) + ")^" + std::to_string(degree);
    const ExactScalar& c = s.coefficient;
    std::string sign = first ? "" : " + ";
    if (c.isRational()) {
        Rational r = c.rational();
        if (r < 0) {
            sign = first ? "-" : " - ";
            r = -r;
        }
        if (r == 1) return sign + form;
        return sign + toString(r) + "*" + form;
    }
    return sign + "(" + c.toString() + ")*" + form;
}

std::string decompositionText(const PowerSumDecomposition& dec, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < dec.summands.size(); ++i) out += summandText(dec.summands[i], dec.degree, names, i == 0);
    return out.empty() ? "0" : out;
}

json summandsJson(const PowerSumDecomposition& dec, const std::vector<std::string>& names) {
    json list = json::array();
    for (const auto& s : dec.summands) {
        json coeffs = json::array();
        for (const auto& c : s.form.coefficients) coeffs.push_back(exact(c));
        list.push_back({{"coefficient", exact(s.coefficient)}, {"form", s.form.toString(names)}, {"form_coefficients", coeffs}});
    }
    return list;
}

/// F = c * l^d for a binary form whose center system has rank <= 1.
PowerSumDecomposition singlePower(const BinaryForm& f) {
    PowerSumDecomposition dec;
    dec.degree = f.degree();
    if (f.norm(0) != 0) {
        dec.summands.push_back({ExactScalar(f.norm(0)), LinearForm{{ExactScalar(1L), ExactScalar(f.norm(1) / f.norm(0))}}});
    } else {
        dec.summands.push_back({ExactScalar(f.norm(f.degree())), LinearForm{{ExactScalar(0L), ExactScalar(1L)}}});
    }
    return dec;
}

struct Input {
    std::string canonical;
    std::optional<ParsedInput> parsed;
    std::optional<UnivariateEquation> equation;
};

Input readInput(const Options& o, const std::string& text) {
    Input in;
    if (o.inputKind == "coeffs") {
        in.equation = parseCoefficients(text);
        in.canonical = in.equation->toString();
    } else {
        in.parsed = parsePolynomial(text);
        in.canonical = render(in.parsed->polynomial);
    }
    return in;
}

UnivariateEquation equationOf(const Input& in) { return in.equation ? *in.equation : in.parsed->toUnivariate(); }

std::pair<NAryForm, std::vector<std::string>> formOf(const Input& in) {
    if (in.equation) return {NAryForm::fromUnivariate(*in.equation), {"x", "y"}};
    return {in.parsed->toForm(), in.parsed->formVariables()};
}

json rootJson(const RadicalRoot& r) {
    return json{{"expr", r.expr},
                {"pretty", r.pretty},
                {"re", r.value.re().toDouble()},
                {"im", r.value.im().toDouble()},
                {"multiplicity", r.multiplicity},
                {"exact", r.exact ? json(toString(*r.exact)) : json(nullptr)}};
}

Output solve(const Options& o, const Input& in) {
    auto eq = equationOf(in);
    int d = eq.degree();
    Output res;
    json& j = res.doc;
    std::ostringstream text;
    j["input"] = eq.toString();
    j["degree"] = d;
    text << "equation: " << eq.toString() << " = 0\n";

    std::optional<EquationClass> cls;
    if (d >= 3) {
        cls = classify(eq);
        j["class"] = toString(cls->tag);
        j["invariants"] = invariantsJson(eq.normCoeffs(), cls->hankelRank);
        text << "class: " << cls->describe() << "\n" << invariantsText(eq.normCoeffs(), cls->hankelRank);
    } else {
        j["class"] = nullptr;
        j["invariants"] = nullptr;
    }

    SolveOptions options;
    options.bits = o.precision;
    RootSet roots;
    std::optional<TwoPowerData> twoPowers;
    try {
        auto sol = solveDetailed(eq, options);
        roots = sol.roots;
        twoPowers = sol.twoPowers;
    } catch (const NoRadicalMethod&) {
        if (d != 4) throw;
        roots = solveQuarticByTwoSquares(eq, o.precision);
    }

    json decomposition{{"method", roots.method}, {"transforms", json::array()}, {"notes", roots.notes}};
    for (const auto& t : roots.preTransforms) decomposition["transforms"].push_back(t.describe());
    json summands = json::array();
    if (cls && cls->tag != EquationClassTag::LinearTimesPowerD1 && cls->tag != EquationClassTag::NoNontrivialCenter) {
        auto form = BinaryForm::homogenize(eq);
        auto dec = cls->tag == EquationClassTag::PerfectPower ? singlePower(form) : completePowers(form);
        summands = summandsJson(dec, {"x", "y"});
        text << "F(x, y) = " << decompositionText(dec, {"x", "y"}) << "\n";
    }
    decomposition["summands"] = summands;
    if (twoPowers) {
        const auto& g = twoPowers->generator;
        decomposition["lambda1"] = exact(g.lambda1);
        decomposition["lambda2"] = exact(g.lambda2);
        decomposition["radicand"] = exact(twoPowers->radicand);
        decomposition["delta"] = twoPowers->exactDelta ? json(toString(*twoPowers->exactDelta)) : json(nullptr);
        text << "lambda1 = " << g.lambda1 << ", lambda2 = " << g.lambda2 << ", delta^" << d << " = " << twoPowers->radicand
             << "\n";
    }
    j["decomposition"] = decomposition;

    text << "method: " << roots.method;
    for (const auto& t : roots.preTransforms) text << ", " << t.describe();
    text << "\n";
    for (const auto& n : roots.notes) text << "note: " << n << "\n";
    j["roots"] = json::array();
    for (const auto& r : roots.roots) {
        j["roots"].push_back(rootJson(r));
        text << "  x = " << (r.exact ? toString(*r.exact) : decimal(r.value));
        if (r.multiplicity > 1) text << "  (multiplicity " << r.multiplicity << ")";
        text << "\n      " << r.pretty << "\n";
    }

    if (o.verify) {
        double residual = maxNormalizedResidual(eq, roots);
        auto oracle = oracleRoots(eq, o.precision);
        auto cmp = compareRootSets(roots, oracle, kRootTolerance);
        auto vieta = vietaDeviation(eq, roots);
        j["verification"] = {{"max_residual", residual},
                             {"oracle_max_distance", cmp.maxDistance},
                             {"vieta_sum", vieta.sum},
                             {"vieta_product", vieta.product},
                             {"passed", cmp.passed}};
        text << "verification: max residual " << residual << ", oracle distance " << cmp.maxDistance << ": "
             << (cmp.passed ? "passed" : "FAILED") << "\n";
        if (!cmp.passed) {
            res.verificationFailed = true;
            res.failure = "radical roots disagree with the numeric oracle: " + cmp.message;
        }
    } else {
        j["verification"] = nullptr;
    }
    res.text = text.str();
    return res;
}

Output classifyCommand(const Input& in) {
    auto eq = equationOf(in);
    auto cls = classify(eq);
    Output res;
    res.doc = {{"input", eq.toString()},
               {"degree", eq.degree()},
               {"class", toString(cls.tag)},
               {"description", cls.describe()},
               {"invariants", invariantsJson(eq.normCoeffs(), cls.hankelRank)},
               {"center_discriminant", cls.centerDiscriminant ? json(toString(*cls.centerDiscriminant)) : json(nullptr)}};
    res.text = std::string(toString(cls.tag)) + "\n  " + cls.describe() + "\n  " +
               invariantsText(eq.normCoeffs(), cls.hankelRank);
    return res;
}

Output oracleCommand(const Options& o, const Input& in) {
    auto eq = equationOf(in);
    auto roots = oracleRoots(eq, o.precision);
    Output res;
    json list = json::array();
    std::ostringstream text;
    text << "equation: " << eq.toString() << " = 0\n";
    for (const auto& r : roots.roots) {
        list.push_back({{"re", r.value.re().toDouble()}, {"im", r.value.im().toDouble()}, {"multiplicity", r.multiplicity}});
        text << "  x ~ " << decimal(r.value);
        if (r.multiplicity > 1) text << "  (cluster of " << r.multiplicity << ")";
        text << "\n";
    }
    text << roots.iterations << " iterations at " << roots.bits << " bits\n";
    res.doc = {{"input", eq.toString()}, {"degree", eq.degree()}, {"bits", roots.bits}, {"iterations", roots.iterations},
               {"roots", list}};
    res.text = text.str();
    return res;
}

Output centerCommand(const Input& in) {
    auto [f, names] = formOf(in);
    auto basis = computeCenter(f);
    Output res;
    json& j = res.doc;
    std::ostringstream text;
    j["input"] = f.toString(names);
    j["variables"] = names;
    j["degree"] = f.degree();
    j["dimension"] = basis.dim();
    j["commutative"] = basis.commutative;
    j["basis"] = json::array();
    text << "form: " << f.toString(names) << "\n";
    text << "center dimension " << basis.dim() << (basis.commutative ? ", commutative" : ", not commutative") << "\n";
    for (std::size_t k = 0; k < basis.basis.size(); ++k) {
        j["basis"].push_back(matrixJson(basis.basis[k]));
        text << "B" << k + 1 << " =\n" << matrixText(basis.basis[k], "  ");
    }
    j["invariants"] = nullptr;
    if (f.variables() == 2) {
        auto binary = f.toBinary();
        int r = static_cast<int>(rank(binaryCenterSystem(binary)));
        j["invariants"] = invariantsJson(binary.normCoeffs(), r);
        text << invariantsText(binary.normCoeffs(), r);
        auto inv = centerInvariants(binary.normCoeffs());
        if (r == 2 && inv.d1 != 0) {
            auto gen = centerGenerator(binary);
            j["generator"] = matrixJson(gen.lambda);
            text << "generator Lambda =\n" << matrixText(gen.lambda, "  ");
        }
    }
    res.text = text.str();
    return res;
}

Output decomposeCommand(const Options& o, const Input& in) {
    auto [f, names] = formOf(in);
    Output res;
    json& j = res.doc;
    std::ostringstream text;
    j["input"] = f.toString(names);
    j["variables"] = names;
    j["degree"] = f.degree();
    text << "form: " << f.toString(names) << "\n";
    ProfileOptions profileOptions;
    profileOptions.seed = o.seed;

    std::optional<PowerSumDecomposition> dec;
    std::string method;
    if (f.variables() == 2 && f.degree() >= 3) {
        auto binary = f.toBinary();
        if (rank(binaryCenterSystem(binary)) <= 1) {
            dec = singlePower(binary);
            method = "perfect-power";
        } else {
            try {
                dec = completePowers(binary);
                method = "complete-powers";
            } catch (const Error&) {
            }
        }
    }
    if (!dec) {
        try {
            auto diag = diagonalizeForm(f, profileOptions);
            dec = diag.asPowerSum;
            method = "idempotents";
            j["change_of_variables"] = matrixJson(diag.p);
        } catch (const IrrationalSpectrum&) {
            auto numeric = diagonalizeNumeric(f, o.precision, profileOptions);
            json list = json::array();
            text << "method: idempotents-numeric\n";
            for (const auto& s : numeric.asPowerSum.summands) {
                json form = json::array();
                std::string formText;
                for (const auto& c : s.form) {
                    form.push_back(decimal(c));
                    formText += (formText.empty() ? "" : ", ") + decimal(c);
                }
                list.push_back({{"coefficient", decimal(s.coefficient)}, {"form_coefficients", form}});
                text << "  (" << decimal(s.coefficient) << ") * [" << formText << "]^" << f.degree() << "\n";
            }
            bool ok = checkDecomposition(f, numeric.asPowerSum, kRootTolerance, o.precision);
            j["method"] = "idempotents-numeric";
            j["summands"] = list;
            j["verified"] = ok;
            text << "expand-back: " << (ok ? "matches" : "MISMATCH") << "\n";
            res.text = text.str();
            if (!ok) {
                res.verificationFailed = true;
                res.failure = "numeric decomposition does not expand back to the input";
            }
            return res;
        }
    }
    bool ok = checkDecomposition(f, *dec);
    j["method"] = method;
    j["summands"] = summandsJson(*dec, names);
    j["verified"] = ok;
    text << "method: " << method << "\n";
    text << "f = " << decompositionText(*dec, names) << "\n";
    text << "expand-back: " << (ok ? "exact match" : "MISMATCH") << "\n";
    res.text = text.str();
    if (!ok) {
        res.verificationFailed = true;
        res.failure = "decomposition does not expand back to the input";
    }
    return res;
}

std::string parseErrorText(const ParseError& e) {
    std::string msg = "parse error at line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) +
                      ": " + e.what();
    if (!e.expected().empty()) {
        msg += " (expected ";
        for (std::size_t i = 0; i < e.expected().size(); ++i) msg += (i ? ", " : "") + e.expected()[i];
        msg += ")";
    }
    return msg;
}

std::string readAll(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

Outcome execute(const Options& o, const std::string& text) {
    Outcome outcome;
    try {
        Input in = readInput(o, text);
        Output res;
        if (o.command == "solve") {
            res = solve(o, in);
        } else if (o.command == "classify") {
            res = classifyCommand(in);
        } else if (o.command == "oracle") {
            res = oracleCommand(o, in);
        } else if (o.command == "center") {
            res = centerCommand(in);
        } else if (o.command == "decompose") {
            res = decomposeCommand(o, in);
        } else {
            outcome.code = kUsage;
            outcome.err = "unknown command '" + o.command + "'\n";
            return outcome;
        }
        if (o.format == "json") {
            outcome.out = res.doc.dump(o.batch.empty() ? 2 : -1) + "\n";
        } else {
            outcome.out = res.text;
        }
        if (res.verificationFailed) {
            outcome.code = kVerificationFailure;
            outcome.err = res.failure + "\n";
        }
    } catch (const ParseError& e) {
        outcome.code = kParseFailure;
        outcome.err = parseErrorText(e) + "\n";
    } catch (const DegreeError& e) {
        outcome.code = kParseFailure;
        outcome.err = std::string("unsuitable input: ") + e.what() + "\n";
    } catch (const NonConvergence& e) {
        outcome.code = kVerificationFailure;
        outcome.err = std::string("verification failed: ") + e.what() + "\n";
    } catch (const Error& e) {
        outcome.code = kNotApplicable;
        outcome.err = std::string("method not applicable: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        outcome.code = kNotApplicable;
        outcome.err = std::string("internal error: ") + e.what() + "\n";
    }
    return outcome;
}

int runCommand(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solve polynomial equations by completing powers of linear forms", "powsolve"};
    app.require_subcommand(1);
    Options o;
    bool noVerify = false;

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"solve", "Classify an equation and solve it by radicals, cross-checked against a numeric oracle"},
        {"center", "Basis of the center algebra of a form"},
        {"decompose", "Write a form as a sum of powers of linear forms"},
        {"classify", "Classify an equation by the structure of its center"},
        {"oracle", "Numeric roots only"},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("source", o.source, "Polynomial text or coefficient list; - reads stdin");
        sub->add_option("--input", o.inputKind, "How to read the input")->check(CLI::IsMember({"expr", "coeffs"}));
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--precision", o.precision, "Mantissa bits for numeric work")->check(CLI::Range(16U, 1U << 16));
        sub->add_flag("--no-verify", noVerify, "Skip the oracle cross-check");
        sub->add_option("--seed", o.seed, "Seed for the random generic elements");
        sub->add_option("--batch", o.batch, "File with one input per line (- for stdin), solved concurrently");
        sub->callback([&o, name = std::string(c.name)] { o.command = name; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    o.verify = !noVerify;

    if (o.batch.empty()) {
        if (o.source.empty()) {
            err << "missing input (give the polynomial, a coefficient list, or - for stdin)\n";
            return kUsage;
        }
        std::string text = o.source == "-" ? readAll(in) : o.source;
        Outcome result = execute(o, text);
        out << result.out;
        err << result.err;
        return result.code;
    }

    if (!o.source.empty()) {
        err << "--batch and an inline input are mutually exclusive\n";
        return kUsage;
    }
    std::ifstream file;
    if (o.batch != "-") {
        file.open(o.batch);
        if (!file) {
            err << "cannot open batch file '" << o.batch << "'\n";
            return kUsage;
        }
    }
    std::istream& source = o.batch == "-" ? in : file;
    std::vector<std::string> lines;
    std::vector<std::size_t> lineNumbers;
    std::string line;
    for (std::size_t n = 1; std::getline(source, line); ++n) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
        lineNumbers.push_back(n);
    }

    std::vector<Outcome> results(lines.size());
    std::atomic<std::size_t> nextIndex{0};
    unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(lines.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = nextIndex++; i < lines.size(); i = nextIndex++) results[i] = execute(o, lines[i]);
        });
    }
    for (auto& t : pool) t.join();

    int code = kOk;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (o.format == "text") out << "# line " << lineNumbers[i] << ": " << lines[i] << "\n";
        out << results[i].out;
        if (!results[i].err.empty()) err << "line " << lineNumbers[i] << ": " << results[i].err;
        code = std::max(code, results[i].code);
    }
    return code;
}

}  // namespace powsolve::cli
