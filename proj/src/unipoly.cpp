#include "bq/unipoly.hpp"

#include <sstream>

#include "bq/error.hpp"

namespace bq {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
UniPoly UniPoly::x() { return UniPoly(std::vector<Rational>{0, 1}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_integers(const std::vector<Integer>& c) {
    std::vector<Rational> v;
    v.reserve(c.size());
    for (const auto& z : c) v.emplace_back(z);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Rational(0); }
Rational UniPoly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * (long)i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    Rational l = c_.back();
    std::vector<Rational> v = c_;
    for (auto& x : v) x /= l;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + UniPoly::constant(*it);
    return r;
}

std::vector<Integer> UniPoly::primitive_integer() const {
    if (c_.empty()) return {};
    Integer l = lcm_of_denominators(c_);
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : c_) {
        Rational t = c * l;
        v.push_back(t.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num_mpz_t());
    }
    if (v.back() < 0) g = -g;
    for (auto& z : v) z /= g;
    return v;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
    std::vector<Rational> v = a.c_;
    for (auto& x : v) x *= s;
    return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    Rational lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational t = r[i] / lb;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly poly_gcd(const UniPoly& a0, const UniPoly& b0) {
    UniPoly a = a0, b = b0;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

void extended_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = r;
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = s2;
        t0 = std::move(t1);
        t1 = t2;
    }
    if (r0.is_zero()) {
        g = r0;
        s = UniPoly();
        t = UniPoly();
        return;
    }
    Rational l = 1 / r0.lead();
    g = l * r0;
    s = l * s0;
    t = l * t0;
}

UniPoly squarefree_kernel(const UniPoly& p) {
    if (p.degree() <= 0) return UniPoly::constant(1);
    UniPoly g = poly_gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences
    size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPoly r = UniPoly::constant(dd[n - 1]);
    for (size_t k = n - 1; k-- > 0;) r = r * UniPoly(std::vector<Rational>{-xs[k], 1}) + UniPoly::constant(dd[k]);
    return r;
}

Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Rational prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational sylvester_resultant(const std::vector<Rational>& f, int df, const std::vector<Rational>& g, int dg) {
    int n = df + dg;
    if (n == 0) return 1;
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n, Rational(0)));
    auto at = [](const std::vector<Rational>& v, int i) { return i < (int)v.size() ? v[i] : Rational(0); };
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) s[r][r + i] = at(f, df - i);
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i) s[dg + r][r + i] = at(g, dg - i);
    return bareiss_determinant(std::move(s));
}

Rational discriminant(const UniPoly& p) {
    int d = p.degree();
    if (d < 1) return 0;
    Rational res = sylvester_resultant(p.coeffs(), d, p.derivative().coeffs(), d - 1);
    Rational disc = res / p.lead();
    if ((d * (d - 1) / 2) % 2) disc = -disc;
    return disc;
}

}  // namespace bq
