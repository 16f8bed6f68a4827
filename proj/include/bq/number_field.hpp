#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bq/unipoly.hpp"

namespace bq {

struct NumberFieldData {
    UniPoly modulus;  // monic irreducible
    std::string label;
    std::string generator;
    // x^k mod modulus for k = n .. 2n-2, each of length n
    std::vector<std::vector<Rational>> reduction;
};

class NumberField {
public:
    NumberField();  // Q
    static NumberField rationals();
    static NumberField cyclotomic(int n);      // phi(n) <= 6
    static NumberField quadratic(const Integer& D);  // D square-free, D != 0, 1
    static NumberField from_label(const std::string& label);
    // irreducibility is checked
    static NumberField custom(const UniPoly& modulus, const std::string& label, const std::string& generator);

    int degree() const { return data_->modulus.degree(); }
    bool is_rationals() const { return degree() == 1; }
    const UniPoly& modulus() const { return data_->modulus; }
    const std::string& label() const { return data_->label; }
    const std::string& generator_name() const { return data_->generator; }
    const NumberFieldData& data() const { return *data_; }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.data_ == b.data_ || a.data_->modulus == b.data_->modulus;
    }
    friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

private:
    explicit NumberField(std::shared_ptr<const NumberFieldData> d) : data_(std::move(d)) {}
    static NumberField build(const UniPoly& modulus, const std::string& label, const std::string& generator);
    std::shared_ptr<const NumberFieldData> data_;
};

UniPoly cyclotomic_polynomial(int n);

class NFElement {
public:
    NFElement();  // 0 in Q
    NFElement(const NumberField& K, const Rational& r);
    NFElement(const NumberField& K, std::vector<Rational> coeffs);
    static NFElement generator(const NumberField& K);

    const NumberField& field() const { return K_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws unless is_rational

    NFElement operator-() const;
    NFElement inverse() const;
    NFElement pow(long e) const;
    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    NFElement& operator+=(const NFElement& b) { return *this = *this + b; }
    NFElement& operator-=(const NFElement& b) { return *this = *this - b; }
    NFElement& operator*=(const NFElement& b) { return *this = *this * b; }
    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

    // embeds a rational element into K, or checks K equals the current field
    NFElement coerce(const NumberField& K) const;
    std::string to_string() const;
    bool needs_parens() const;  // more than one nonzero term

private:
    NumberField K_;
    std::vector<Rational> c_;
};

// common field of a and b when one of them is Q; FieldMismatch otherwise
NumberField common_field(const NumberField& a, const NumberField& b);

NFElement parse_element(const std::string& s, const NumberField& K);

}  // namespace bq
