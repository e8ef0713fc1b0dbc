#include "powsolve/parse.hpp"

#include "powsolve/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace powsolve {

namespace {

int variableRank(const std::string& name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    return 1 + (name[1] - '0');
}

bool variableLess(const std::string& a, const std::string& b) { return variableRank(a) < variableRank(b); }

bool isVariable(std::string_view s) {
    if (s == "x" || s == "y") return true;
    return s.size() == 2 && s[0] == 'x' && s[1] >= '1' && s[1] <= '9';
}

int totalDegree(const Monomial& m) {
    int total = 0;
    for (const auto& [name, e] : m) total += e;
    return total;
}

void addTerm(SparsePolynomial& p, const Monomial& m, const Rational& c) {
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second == 0) p.erase(it);
}

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) m[name] += e;
            addTerm(out, m, ca * cb);
        }
    }
    return out;
}

SparsePolynomial constant(const Rational& c) {
    SparsePolynomial p;
    if (c != 0) p[Monomial{}] = c;
    return p;
}

enum class TokenKind { Number, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t) {
    if (t.kind == TokenKind::End) return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t{TokenKind::End, std::string(1, c), line, column};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = TokenKind::Number;
            t.text = std::string(text.substr(i, j - i));
            tokens.push_back(t);
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            std::string name(text.substr(i, j - i));
            if (!isVariable(name)) {
                throw ParseError("unknown variable '" + name + "'", line, column, {"x", "y", "x1..x9"});
            }
            t.kind = TokenKind::Variable;
            t.text = name;
            tokens.push_back(t);
            advance(j - i);
            continue;
        }
        switch (c) {
        case '+': t.kind = TokenKind::Plus; break;
        case '-': t.kind = TokenKind::Minus; break;
        case '*': t.kind = TokenKind::Star; break;
        case '/': t.kind = TokenKind::Slash; break;
        case '^': t.kind = TokenKind::Caret; break;
        case '(': t.kind = TokenKind::LParen; break;
        case ')': t.kind = TokenKind::RParen; break;
        default:
            throw ParseError("unexpected character '" + std::string(1, c) + "'", line, column,
                             {"number", "variable", "+", "-", "*", "^", "(", ")"});
        }
        tokens.push_back(t);
        advance(1);
    }
    tokens.push_back(Token{TokenKind::End, "", line, column});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    SparsePolynomial parse() {
        SparsePolynomial p = sum();
        if (peek().kind != TokenKind::End) fail("unexpected " + describe(peek()), {"+", "-", "*", "end of input"});
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
        throw ParseError(message, peek().line, peek().column, std::move(expected));
    }

    SparsePolynomial sum() {
        SparsePolynomial acc = product();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            bool minus = next().kind == TokenKind::Minus;
            SparsePolynomial rhs = product();
            for (const auto& [m, c] : rhs) addTerm(acc, m, minus ? Rational(-c) : c);
        }
        return acc;
    }

    SparsePolynomial product() {
        SparsePolynomial acc = unary();
        while (peek().kind == TokenKind::Star) {
            next();
            acc = multiply(acc, unary());
        }
        if (peek().kind == TokenKind::Number || peek().kind == TokenKind::Variable || peek().kind == TokenKind::LParen) {
            fail("missing '*' before " + describe(peek()), {"*", "+", "-", "end of input"});
        }
        return acc;
    }

    SparsePolynomial unary() {
        if (peek().kind == TokenKind::Minus) {
            next();
            return multiply(constant(-1), unary());
        }
        if (peek().kind == TokenKind::Plus) {
            next();
            return unary();
        }
        return power();
    }

    SparsePolynomial power() {
        SparsePolynomial base = atom();
        if (peek().kind != TokenKind::Caret) return base;
        next();
        if (peek().kind != TokenKind::Number) fail("exponent must be a nonnegative integer", {"integer"});
        unsigned long e = std::stoul(next().text);
        if (peek().kind == TokenKind::Slash) fail("exponent must be a nonnegative integer", {"+", "-", "*", ")", "end of input"});
        if (peek().kind == TokenKind::Caret) fail("chained '^' needs parentheses", {"+", "-", "*", ")", "end of input"});
        SparsePolynomial result = constant(1);
        for (unsigned long k = 0; k < e; ++k) result = multiply(result, base);
        return result;
    }

    SparsePolynomial atom() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::Number: {
            next();
            Integer num{t.text};
            Integer den = 1;
            if (peek().kind == TokenKind::Slash) {
                next();
                if (peek().kind != TokenKind::Number) fail("expected a denominator", {"integer"});
                den = Integer{next().text};
                if (den == 0) throw ParseError("zero denominator", t.line, t.column, {"nonzero integer"});
            }
            Rational value(num, den);
            value.canonicalize();
            return constant(value);
        }
        case TokenKind::Variable: {
            next();
            SparsePolynomial p;
            p[Monomial{{t.text, 1}}] = 1;
            return p;
        }
        case TokenKind::LParen: {
            next();
            SparsePolynomial inner = sum();
            if (peek().kind != TokenKind::RParen) fail("expected ')' but found " + describe(peek()), {")", "+", "-", "*"});
            next();
            return inner;
        }
        default:
            fail("expected a number, variable or '(' but found " + describe(t), {"number", "variable", "(", "-"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

int ParsedInput::degree() const {
    int d = 0;
    for (const auto& [m, c] : polynomial) d = std::max(d, totalDegree(m));
    return d;
}

bool ParsedInput::homogeneous() const {
    int d = degree();
    return std::all_of(polynomial.begin(), polynomial.end(), [&](const auto& t) { return totalDegree(t.first) == d; });
}

UnivariateEquation ParsedInput::toUnivariate() const {
    std::string var;
    if (variables.size() == 1) {
        var = variables[0];
    } else if (variables.size() == 2 && variables[0] == "x" && variables[1] == "y" && homogeneous()) {
        var = "x";
    } else if (variables.empty()) {
        throw ParseError("expected a polynomial in one variable, got a constant", 1, 1, {"variable"});
    } else {
        throw ParseError("expected a polynomial in one variable or a binary form in x, y", 1, 1, {"x"});
    }
    int d = variables.size() == 2 ? degree() : 0;
    for (const auto& [m, c] : polynomial) {
        auto it = m.find(var);
        d = std::max(d, it == m.end() ? 0 : it->second);
    }
    std::vector<Rational> plain(static_cast<std::size_t>(d + 1));
    for (const auto& [m, c] : polynomial) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        plain[static_cast<std::size_t>(d - e)] += c;
    }
    return UnivariateEquation::fromPlainCoeffs(plain);
}

std::vector<std::string> ParsedInput::formVariables() const {
    if (variables.size() == 1) return {variables[0], variables[0] == "y" ? "x" : "y"};
    return variables;
}

NAryForm ParsedInput::toForm() const {
    if (variables.empty()) throw ParseError("expected a form, got a constant", 1, 1, {"variable"});
    if (variables.size() == 1) return NAryForm::fromUnivariate(toUnivariate());
    if (!homogeneous()) throw ParseError("a form in several variables must be homogeneous", 1, 1, {});
    int n = static_cast<int>(variables.size());
    NAryForm f(n, degree());
    for (const auto& [m, c] : polynomial) {
        Exponents e(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < n; ++k) {
            auto it = m.find(variables[static_cast<std::size_t>(k)]);
            if (it != m.end()) e[static_cast<std::size_t>(k)] = it->second;
        }
        f.add(e, c);
    }
    return f;
}

ParsedInput parsePolynomial(std::string_view text) {
    ParsedInput out;
    out.source = std::string(text);
    out.polynomial = Parser(tokenize(text)).parse();
    for (const auto& [m, c] : out.polynomial) {
        for (const auto& [name, e] : m) {
            if (e > 0 && std::find(out.variables.begin(), out.variables.end(), name) == out.variables.end()) {
                out.variables.push_back(name);
            }
        }
    }
    std::sort(out.variables.begin(), out.variables.end(), variableLess);
    return out;
}

UnivariateEquation parseCoefficients(std::string_view text) {
    std::vector<Rational> plain;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (c == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
        std::string_view word = text.substr(i, j - i);
        try {
            plain.push_back(parseRational(word));
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed coefficient '" + std::string(word) + "'", line, column, {"integer", "p/q"});
        }
        column += static_cast<int>(j - i);
        i = j;
    }
    if (plain.empty()) throw ParseError("no coefficients given", line, column, {"integer", "p/q"});
    if (plain.front() == 0) throw ParseError("leading coefficient is zero", 1, 1, {"nonzero leading coefficient"});
    return UnivariateEquation::fromPlainCoeffs(plain);
}

std::string render(const SparsePolynomial& p) {
    if (p.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
    std::vector<std::string> order;
    for (const auto& [m, c] : p)
        for (const auto& [name, e] : m)
            if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
    std::sort(order.begin(), order.end(), variableLess);
    auto exponents = [&](const Monomial& m) {
        std::vector<int> e;
        for (const auto& name : order) {
            auto it = m.find(name);
            e.push_back(it == m.end() ? 0 : it->second);
        }
        return e;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        int da = totalDegree(a.first);
        int db = totalDegree(b.first);
        if (da != db) return da > db;
        return exponents(a.first) > exponents(b.first);
    });

    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string vars;
        for (const auto& name : order) {
            auto it = m.find(name);
            if (it == m.end() || it->second == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (it->second > 1) vars += "^" + std::to_string(it->second);
        }
        if (vars.empty()) {
            os << toString(magnitude);
        } else if (magnitude == 1) {
            os << vars;
        } else {
            os << toString(magnitude) << "*" << vars;
        }
    }
    return os.str();
}

}  // namespace powsolve
