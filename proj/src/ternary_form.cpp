#include "bq/ternary_form.hpp"

#include <cctype>
#include <sstream>

#include "bq/error.hpp"

namespace bq {

namespace {

void add_into(PolyTerms& acc, const Exponent& e, const NFElement& c) {
    if (c.is_zero()) return;
    auto it = acc.find(e);
    if (it == acc.end()) {
        acc.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

PolyTerms mul_terms(const PolyTerms& a, const PolyTerms& b) {
    PolyTerms r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_into(r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

class Parser {
public:
    Parser(const std::string& s, const NumberField& K) : s_(s), K_(K) {}

    PolyTerms parse() {
        PolyTerms r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool starts(const std::string& t) {
        skip();
        return !t.empty() && s_.compare(pos_, t.size(), t) == 0;
    }

    PolyTerms constant(const NFElement& c) {
        PolyTerms r;
        add_into(r, {0, 0, 0}, c);
        return r;
    }

    PolyTerms expr() {
        PolyTerms acc = term();
        for (;;) {
            if (accept('+')) {
                for (auto& [e, c] : term()) add_into(acc, e, c);
            } else if (accept('-')) {
                for (auto& [e, c] : term()) add_into(acc, e, -c);
            } else {
                return acc;
            }
        }
    }

    PolyTerms term() {
        PolyTerms acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = mul_terms(acc, unary());
            } else if (accept('/')) {
                PolyTerms d = unary();
                if (d.size() > 1 || (d.size() == 1 && d.begin()->first != Exponent{0, 0, 0}))
                    fail("division by a non-constant");
                if (d.empty()) throw Error(ErrorKind::DivisionByZero, "division by zero in '" + s_ + "'");
                NFElement inv = d.begin()->second.inverse();
                for (auto& [e, c] : acc) c *= inv;
            } else {
                return acc;
            }
        }
    }

    PolyTerms unary() {
        if (accept('-')) {
            PolyTerms r = unary();
            for (auto& [e, c] : r) c = -c;
            return r;
        }
        if (accept('+')) return unary();
        return power();
    }

    PolyTerms power() {
        PolyTerms base = primary();
        if (accept('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            PolyTerms r = constant(NFElement(K_, Rational(1)));
            for (int i = 0; i < e; ++i) r = mul_terms(r, base);
            return r;
        }
        return base;
    }

    PolyTerms primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (accept('(')) {
            PolyTerms r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        const std::string& g = K_.generator_name();
        if (!g.empty() && starts(g)) {
            pos_ += g.size();
            return constant(NFElement::generator(K_));
        }
        char c = s_[pos_];
        if (c == 'X' || c == 'Y' || c == 'Z') {
            ++pos_;
            Exponent e{0, 0, 0};
            e[c - 'X'] = 1;
            PolyTerms r;
            r.emplace(e, NFElement(K_, Rational(1)));
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            return constant(NFElement(K_, Rational(Integer(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected token");
    }

    std::string s_;
    NumberField K_;
    size_t pos_ = 0;
};

std::string monomial_string(const Exponent& e) {
    std::string out;
    const char* names = "XYZ";
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

PolyTerms parse_polynomial(const std::string& s, const NumberField& K) { return Parser(s, K).parse(); }

std::string terms_to_string(const PolyTerms& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t) {
        std::string mono = monomial_string(e);
        std::string coef;
        bool negative = false;
        if (c.is_rational()) {
            Rational q = c.to_rational();
            negative = q < 0;
            Rational a = abs(q);
            if (a != 1 || mono.empty()) coef = a.get_str();
        } else {
            coef = c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string();
            if (!c.needs_parens() && coef[0] == '-') {
                negative = true;
                coef = coef.substr(1);
            }
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        os << coef;
        if (!coef.empty() && !mono.empty()) os << "*";
        os << mono;
    }
    return os.str();
}

TernaryForm::TernaryForm(const NumberField& K, int degree, PolyTerms terms) : K_(K), degree_(degree) {
    for (auto& [e, c] : terms) {
        if (c.is_zero()) continue;
        if (e[0] + e[1] + e[2] != degree)
            throw Error(ErrorKind::WrongShape, "term " + monomial_string(e) + " is not of degree " + std::to_string(degree));
        terms_.emplace(e, c.coerce(K));
    }
}

TernaryForm TernaryForm::parse(const std::string& s, const NumberField& K) {
    PolyTerms t = parse_polynomial(s, K);
    if (t.empty()) throw Error(ErrorKind::ParseError, "zero form '" + s + "'");
    const auto& e = t.begin()->first;
    return TernaryForm(K, e[0] + e[1] + e[2], std::move(t));
}

TernaryForm TernaryForm::monomial(const NumberField& K, const Exponent& e, const NFElement& c) {
    PolyTerms t;
    add_into(t, e, c.coerce(K));
    return TernaryForm(K, e[0] + e[1] + e[2], std::move(t));
}

TernaryForm TernaryForm::linear(const NFElement& a, const NFElement& b, const NFElement& c) {
    NumberField K = common_field(common_field(a.field(), b.field()), c.field());
    PolyTerms t;
    add_into(t, {1, 0, 0}, a.coerce(K));
    add_into(t, {0, 1, 0}, b.coerce(K));
    add_into(t, {0, 0, 1}, c.coerce(K));
    return TernaryForm(K, 1, std::move(t));
}

NFElement TernaryForm::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? NFElement(K_, Rational(0)) : it->second;
}

bool TernaryForm::is_rational() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

NFElement TernaryForm::eval(const std::array<NFElement, 3>& p) const {
    NumberField K = K_;
    for (const auto& v : p) K = common_field(K, v.field());
    std::array<std::vector<NFElement>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        pw[i].push_back(NFElement(K, Rational(1)));
        NFElement v = p[i].coerce(K);
        for (int k = 1; k <= degree_; ++k) pw[i].push_back(pw[i].back() * v);
    }
    NFElement r(K, Rational(0));
    for (const auto& [e, c] : terms_) r += c.coerce(K) * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
    return r;
}

TernaryForm TernaryForm::partial(int var) const {
    PolyTerms t;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        f[var] -= 1;
        add_into(t, f, c * NFElement(K_, Rational(e[var])));
    }
    return TernaryForm(K_, degree_ - 1, std::move(t));
}

TernaryForm TernaryForm::coerce(const NumberField& K) const {
    if (K == K_) return *this;
    PolyTerms t;
    for (const auto& [e, c] : terms_) t.emplace(e, c.coerce(K));
    return TernaryForm(K, degree_, std::move(t));
}

TernaryForm TernaryForm::scaled(const NFElement& s) const {
    NumberField K = common_field(K_, s.field());
    PolyTerms t;
    for (const auto& [e, c] : terms_) add_into(t, e, c.coerce(K) * s.coerce(K));
    return TernaryForm(K, degree_, std::move(t));
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
    if (a.is_zero() && a.degree_ != b.degree_) return b;
    if (b.is_zero() && a.degree_ != b.degree_) return a;
    if (a.degree_ != b.degree_) throw Error(ErrorKind::WrongShape, "adding forms of different degrees");
    NumberField K = common_field(a.K_, b.K_);
    PolyTerms t;
    for (const auto& [e, c] : a.terms_) add_into(t, e, c.coerce(K));
    for (const auto& [e, c] : b.terms_) add_into(t, e, c.coerce(K));
    return TernaryForm(K, a.degree_, std::move(t));
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) {
    return a + b.scaled(NFElement(b.K_, Rational(-1)));
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    NumberField K = common_field(a.K_, b.K_);
    return TernaryForm(K, a.degree_ + b.degree_, mul_terms(a.coerce(K).terms_, b.coerce(K).terms_));
}

bool operator==(const TernaryForm& a, const TernaryForm& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.is_zero()) return true;
    if (a.degree_ != b.degree_) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

std::string TernaryForm::to_string() const { return terms_to_string(terms_); }

TernaryForm substitute_linear(const TernaryForm& F, const std::array<NFElement, 9>& M) {
    NumberField K = F.field();
    for (const auto& m : M) K = common_field(K, m.field());
    std::array<std::vector<PolyTerms>, 3> pw;
    for (int i = 0; i < 3; ++i) {
        PolyTerms one;
        one.emplace(Exponent{0, 0, 0}, NFElement(K, Rational(1)));
        pw[i].push_back(one);
        PolyTerms lin;
        add_into(lin, {1, 0, 0}, M[3 * i].coerce(K));
        add_into(lin, {0, 1, 0}, M[3 * i + 1].coerce(K));
        add_into(lin, {0, 0, 1}, M[3 * i + 2].coerce(K));
        for (int k = 1; k <= F.degree(); ++k) pw[i].push_back(mul_terms(pw[i].back(), lin));
    }
    PolyTerms out;
    for (const auto& [e, c] : F.terms()) {
        PolyTerms prod = mul_terms(mul_terms(pw[0][e[0]], pw[1][e[1]]), pw[2][e[2]]);
        NFElement cc = c.coerce(K);
        for (const auto& [f, d] : prod) add_into(out, f, cc * d);
    }
    return TernaryForm(K, F.degree(), std::move(out));
}

}  // namespace bq
