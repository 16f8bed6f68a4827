#pragma once

#include <vector>

#include "bq/unipoly.hpp"

namespace bq {

struct IrreducibleFactor {
    UniPoly poly;  // monic
    int multiplicity = 1;
};

struct Factorization {
    Rational unit;
    std::vector<IrreducibleFactor> factors;
    UniPoly expand() const;
};

Factorization factor_low_degree(const UniPoly& p);

using IntPoly = std::vector<Integer>;  // low degree first

IntPoly int_primitive(IntPoly f);  // divides out content, positive leading coefficient
// rational roots a/b of an integer polynomial with f(0) != 0, as (a, b) with b > 0
std::vector<std::pair<Integer, Integer>> rational_roots(const IntPoly& f);
// exact division f / g for integer polynomials; throws if not exact
IntPoly int_divexact(const IntPoly& f, const IntPoly& g);
// irreducible factors of a squarefree primitive integer polynomial, deg <= 6
std::vector<IntPoly> factor_squarefree_int(const IntPoly& f);
// true unless some filter prime shows f has no factor of degree k over Q
bool may_have_factor_of_degree(const IntPoly& f, int k);

}  // namespace bq
