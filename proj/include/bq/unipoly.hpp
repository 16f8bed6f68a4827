#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bq/rational.hpp"

namespace bq {

// Univariate polynomial over Q, coefficients low degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly x();
    static UniPoly monomial(const Rational& c, int degree);
    static UniPoly from_integers(const std::vector<Integer>& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational lead() const;

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly compose(const UniPoly& inner) const;
    // primitive integer polynomial with positive leading coefficient
    std::vector<Integer> primitive_integer() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);  // monic, or zero
UniPoly squarefree_kernel(const UniPoly& p);            // monic product of distinct irreducible factors
// s*a + t*b = g (monic gcd)
void extended_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t);

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational discriminant(const UniPoly& p);

// determinant by fraction-free elimination
Rational bareiss_determinant(std::vector<std::vector<Rational>> m);
// Sylvester resultant with formal degrees (leading zeros allowed)
Rational sylvester_resultant(const std::vector<Rational>& f, int df, const std::vector<Rational>& g, int dg);

}  // namespace bq
