#include "latframe/exact.hpp"

#include <cctype>

#include "latframe/errors.hpp"

namespace latframe {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ParseError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(const std::string& text) {
    const std::string t = trim(text);
    if (!is_integer_literal(t)) {
        throw ParseError("malformed integer '" + text + "'");
    }
    return Integer(t);
}

Rational parse_rational(const std::string& text) {
    const std::string t = trim(text);
    const std::size_t slash = t.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(t)) {
            throw ParseError("malformed rational '" + text + "'");
        }
        return Rational(Integer(t));
    }
    const std::string num = trim(t.substr(0, slash));
    const std::string den = trim(t.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw ParseError("malformed rational '" + text + "'");
    }
    const Integer d(den);
    if (d == 0) {
        throw ParseError("zero denominator in '" + text + "'");
    }
    return make_rational(Integer(num), d);
}

std::string to_string(const Rational& x) {
    return x.get_str();
}

std::string to_string(const Integer& x) {
    return x.get_str();
}

Integer floor_rational(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

} // namespace latframe
