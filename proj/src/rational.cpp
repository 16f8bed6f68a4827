#include "bq/rational.hpp"

#include "bq/error.hpp"

namespace bq {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) throw Error(ErrorKind::ParseError, "empty rational");
    auto slash = t.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty()) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
        for (size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9') throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
        return Integer(part[0] == '+' ? part.substr(1) : part);
    };
    if (slash == std::string::npos) return Rational(parse_int(t));
    return make_rational(parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1)));
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw Error(ErrorKind::DivisionByZero, "0 to a negative power");
        Rational inv = 1 / base;
        return rpow(inv, -e);
    }
    Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
    r.canonicalize();
    return r;
}

Integer naive_height(const Rational& q) {
    Integer n = abs(q.get_num());
    return n > q.get_den() ? n : Integer(q.get_den());
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    auto n = integer_sqrt_exact(q.get_num());
    if (!n) return std::nullopt;
    auto d = integer_sqrt_exact(q.get_den());
    if (!d) return std::nullopt;
    return make_rational(*n, *d);
}

bool is_rational_square(const Rational& q) { return rational_sqrt(q).has_value(); }

bool is_rational_fourth_power(const Rational& q) {
    auto r = rational_sqrt(q);
    return r && is_rational_square(*r);
}

static bool is_integer_cube(const Integer& n) {
    Integer r;
    return mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) != 0;
}

bool is_rational_cube(const Rational& q) { return is_integer_cube(q.get_num()) && is_integer_cube(q.get_den()); }

Integer lcm_of_denominators(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

Integer gcd_of_numerators(const std::vector<Rational>& v) {
    Integer g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

}  // namespace bq
