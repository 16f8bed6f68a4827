#include "bq/number_field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "bq/arith.hpp"
#include "bq/error.hpp"
#include "bq/factor.hpp"
#include "bq/ternary_form.hpp"

namespace bq {

namespace {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, NumberField>& registry() {
    static std::map<std::string, NumberField> r;
    return r;
}

}  // namespace

UniPoly cyclotomic_polynomial(int n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = -1;
    c[n] = 1;
    UniPoly p(c);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divmod(p, cyclotomic_polynomial(d)).first;
    return p;
}

NumberField NumberField::build(const UniPoly& modulus, const std::string& label, const std::string& generator) {
    auto d = std::make_shared<NumberFieldData>();
    d->modulus = modulus;
    d->label = label;
    d->generator = generator;
    int n = modulus.degree();
    // x^n = -(lower terms)
    std::vector<Rational> cur(n, Rational(0));
    for (int i = 0; i < n; ++i) cur[i] = -modulus.coeff(i);
    for (int k = n; k <= 2 * n - 2; ++k) {
        d->reduction.push_back(cur);
        std::vector<Rational> next(n, Rational(0));
        Rational top = cur[n - 1];
        for (int i = n - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = 0;
        for (int i = 0; i < n; ++i) next[i] -= top * modulus.coeff(i);
        cur = next;
    }
    return NumberField(std::shared_ptr<const NumberFieldData>(d));
}

NumberField::NumberField() : NumberField(rationals()) {}

NumberField NumberField::rationals() {
    static const NumberField Q = build(UniPoly(std::vector<Rational>{0, 1}), "Q", "");
    return Q;
}

NumberField NumberField::cyclotomic(int n) {
    if (n <= 2) return rationals();
    if (euler_phi(n) > 6) throw Error(ErrorKind::DegreeTooLarge, "cyclotomic field of degree > 6");
    std::string label = "Q(zeta" + std::to_string(n) + ")";
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(label);
    if (it != registry().end()) return it->second;
    NumberField K = build(cyclotomic_polynomial(n), label, "zeta" + std::to_string(n));
    registry().emplace(label, K);
    return K;
}

NumberField NumberField::quadratic(const Integer& D) {
    if (D == 0 || D == 1) throw Error(ErrorKind::NotSquareFree, "Q(sqrt(D)) needs D != 0, 1");
    auto sf = squarefree_part(D);
    if (sf.normalized && sf.core != D) throw Error(ErrorKind::NotSquareFree, "D = " + D.get_str() + " is not square-free");
    std::string gen = "sqrt(" + D.get_str() + ")";
    std::string label = "Q(" + gen + ")";
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(label);
    if (it != registry().end()) return it->second;
    NumberField K = build(UniPoly(std::vector<Rational>{Rational(-D), 0, 1}), label, gen);
    registry().emplace(label, K);
    return K;
}

NumberField NumberField::from_label(const std::string& label) {
    if (label == "Q") return rationals();
    if (label.rfind("Q(zeta", 0) == 0 && label.back() == ')') {
        std::string n = label.substr(6, label.size() - 7);
        try {
            return cyclotomic(std::stoi(n));
        } catch (const std::invalid_argument&) {
        }
    }
    if (label.rfind("Q(sqrt(", 0) == 0 && label.size() > 9 && label.substr(label.size() - 2) == "))") {
        std::string d = label.substr(7, label.size() - 9);
        return quadratic(parse_rational(d).get_num());
    }
    throw Error(ErrorKind::UnknownLabel, "unknown number field '" + label + "'");
}

NumberField NumberField::custom(const UniPoly& modulus, const std::string& label, const std::string& generator) {
    if (modulus.degree() < 1 || modulus.degree() > 6)
        throw Error(ErrorKind::DegreeTooLarge, "number field modulus must have degree 1..6");
    auto f = factor_low_degree(modulus);
    if (f.factors.size() != 1 || f.factors[0].multiplicity != 1)
        throw Error(ErrorKind::InadmissibleParameters, "modulus " + modulus.to_string() + " is reducible");
    return build(modulus.monic(), label, generator);
}

NumberField common_field(const NumberField& a, const NumberField& b) {
    if (a == b) return a;
    if (a.is_rationals()) return b;
    if (b.is_rationals()) return a;
    throw Error(ErrorKind::FieldMismatch, a.label() + " vs " + b.label());
}

NFElement::NFElement() : K_(NumberField::rationals()), c_{Rational(0)} {}

NFElement::NFElement(const NumberField& K, const Rational& r) : K_(K), c_(K.degree(), Rational(0)) { c_[0] = r; }

NFElement::NFElement(const NumberField& K, std::vector<Rational> coeffs) : K_(K), c_(std::move(coeffs)) {
    int n = K.degree();
    if ((int)c_.size() > n) {
        // reduce a longer residue polynomial
        UniPoly r = divmod(UniPoly(c_), K.modulus()).second;
        c_.assign(n, Rational(0));
        for (int i = 0; i <= r.degree(); ++i) c_[i] = r.coeff(i);
    }
    c_.resize(n, Rational(0));
}

NFElement NFElement::generator(const NumberField& K) {
    if (K.degree() == 1) return NFElement(K, -K.modulus().coeff(0));
    std::vector<Rational> c(K.degree(), Rational(0));
    c[1] = 1;
    return NFElement(K, c);
}

bool NFElement::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool NFElement::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational NFElement::to_rational() const {
    if (!is_rational()) throw Error(ErrorKind::UnsupportedCoefficientField, "element " + to_string() + " is not rational");
    return c_[0];
}

NFElement NFElement::operator-() const {
    NFElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    if (a.K_ != b.K_) {
        NumberField K = common_field(a.K_, b.K_);
        return a.coerce(K) + b.coerce(K);
    }
    NFElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

NFElement operator-(const NFElement& a, const NFElement& b) { return a + (-b); }

NFElement operator*(const NFElement& a, const NFElement& b) {
    if (a.K_ != b.K_) {
        NumberField K = common_field(a.K_, b.K_);
        return a.coerce(K) * b.coerce(K);
    }
    int n = a.K_.degree();
    if (n == 1) return NFElement(a.K_, a.c_[0] * b.c_[0]);
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    const auto& red = a.K_.data().reduction;
    std::vector<Rational> r(prod.begin(), prod.begin() + n);
    for (int k = n; k <= 2 * n - 2; ++k) {
        if (prod[k] == 0) continue;
        for (int i = 0; i < n; ++i)
            if (red[k - n][i] != 0) r[i] += prod[k] * red[k - n][i];
    }
    NFElement out;
    out.K_ = a.K_;
    out.c_ = std::move(r);
    return out;
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + K_.label());
    if (K_.degree() == 1) return NFElement(K_, 1 / c_[0]);
    UniPoly g, s, t;
    extended_gcd(UniPoly(c_), K_.modulus(), g, s, t);
    // g = 1 since the modulus is irreducible
    return NFElement(K_, s.coeffs());
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

NFElement NFElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElement r(K_, Rational(1)), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool operator==(const NFElement& a, const NFElement& b) {
    if (a.K_ != b.K_) {
        if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
        return false;
    }
    return a.c_ == b.c_;
}

NFElement NFElement::coerce(const NumberField& K) const {
    if (K_ == K) return *this;
    if (K_.is_rationals() || is_rational()) {
        if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "cannot coerce into " + K.label());
        return NFElement(K, c_[0]);
    }
    throw Error(ErrorKind::FieldMismatch, "cannot coerce " + K_.label() + " element into " + K.label());
}

bool NFElement::needs_parens() const {
    int nz = 0;
    for (const auto& c : c_)
        if (c != 0) ++nz;
    return nz > 1;
}

std::string NFElement::to_string() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (int i = (int)c_.size() - 1; i >= 0; --i) {
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
        os << K_.generator_name();
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

NFElement parse_element(const std::string& s, const NumberField& K) {
    auto terms = parse_polynomial(s, K);
    NFElement r(K, Rational(0));
    for (const auto& [e, c] : terms) {
        if (e[0] || e[1] || e[2]) throw Error(ErrorKind::ParseError, "element '" + s + "' contains variables");
        r += c;
    }
    return r;
}

}  // namespace bq
