#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "bq/number_field.hpp"

namespace bq {

using Exponent = std::array<int, 3>;
// descending lexicographic: X^4 before X^3*Y before ... before Z^4
using PolyTerms = std::map<Exponent, NFElement, std::greater<Exponent>>;

// Sparse polynomial in X, Y, Z over K; the generator of K may appear by name.
PolyTerms parse_polynomial(const std::string& s, const NumberField& K);
std::string terms_to_string(const PolyTerms& t);

class TernaryForm {
public:
    TernaryForm() = default;
    TernaryForm(const NumberField& K, int degree, PolyTerms terms);
    static TernaryForm parse(const std::string& s, const NumberField& K = NumberField::rationals());
    static TernaryForm monomial(const NumberField& K, const Exponent& e, const NFElement& c);
    // a*X + b*Y + c*Z
    static TernaryForm linear(const NFElement& a, const NFElement& b, const NFElement& c);

    const NumberField& field() const { return K_; }
    int degree() const { return degree_; }
    const PolyTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    NFElement coefficient(const Exponent& e) const;
    bool is_rational() const;  // all coefficients in Q

    NFElement eval(const std::array<NFElement, 3>& p) const;
    TernaryForm partial(int var) const;
    TernaryForm coerce(const NumberField& K) const;
    TernaryForm scaled(const NFElement& s) const;

    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
    friend bool operator==(const TernaryForm& a, const TernaryForm& b);
    friend bool operator!=(const TernaryForm& a, const TernaryForm& b) { return !(a == b); }

    std::string to_string() const;

private:
    NumberField K_;
    int degree_ = 0;
    PolyTerms terms_;
};

// G(v) = F(M v) for a 3x3 matrix M (row-major)
TernaryForm substitute_linear(const TernaryForm& F, const std::array<NFElement, 9>& M);

}  // namespace bq
