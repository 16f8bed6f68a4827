#pragma once

#include <cstdint>
#include <vector>

#include "bq/rational.hpp"

// Dense polynomials over F_p for p < 2^31, low degree first.
namespace bq::modp {

using Poly = std::vector<uint64_t>;

uint64_t inv(uint64_t a, uint64_t p);
uint64_t reduce(const Integer& z, uint64_t p);
// returns false if p divides the denominator
bool reduce(const Rational& q, uint64_t p, uint64_t& out);

void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, uint64_t p);
Poly rem(Poly a, const Poly& m, uint64_t p);
Poly sub(Poly a, const Poly& b, uint64_t p);
Poly gcd(Poly a, Poly b, uint64_t p);  // monic
Poly derivative(const Poly& a, uint64_t p);
Poly powmod_x(uint64_t e, const Poly& m, uint64_t p);  // x^e mod m
Poly powmod(Poly base, uint64_t e, const Poly& m, uint64_t p);

// true if f (deg f >= 1, leading coefficient a unit mod p) has an irreducible factor of degree 1 or 2 mod p
bool has_factor_deg_le2(const Poly& f, uint64_t p);
// degrees of the irreducible factors of a squarefree f; empty if f is not squarefree mod p
std::vector<int> degree_pattern(const Poly& f, uint64_t p);

// some primes > 2 used as filters
const std::vector<uint64_t>& filter_primes();

}  // namespace bq::modp
