#include "powsolve/rational.hpp"

#include "powsolve/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace powsolve {

ParseError::ParseError(const std::string& message, int line, int column, std::vector<std::string> expected)
    : Error(message), line_(line), column_(column), expected_(std::move(expected)) {}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(result);
}

std::string toString(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parseRational(std::string_view text) {
    auto isInteger = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
    }
    if (!isInteger(num) || !isInteger(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

namespace {

std::optional<Integer> exactIntegerRoot(const Integer& n, unsigned k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return root;
}

}  // namespace

std::optional<Rational> exactRoot(const Rational& r, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return r;
    if (r < 0 && k % 2 == 0) return std::nullopt;
    auto num = exactIntegerRoot(r.get_num(), k);
    if (!num) return std::nullopt;
    auto den = exactIntegerRoot(r.get_den(), k);
    if (!den) return std::nullopt;
    Rational root(*num, *den);
    root.canonicalize();
    return root;
}

bool isSquare(const Rational& r) {
    return r >= 0 && mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
}

Rational pow(const Rational& base, unsigned exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Integer commonDenominator(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

std::size_t maxBits(const std::vector<Rational>& values) {
    std::size_t bits = 1;
    for (const auto& v : values) {
        bits = std::max(bits, mpz_sizeinbase(v.get_num_mpz_t(), 2));
        bits = std::max(bits, mpz_sizeinbase(v.get_den_mpz_t(), 2));
    }
    return bits;
}

}  // namespace powsolve
