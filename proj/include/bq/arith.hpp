#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bq/rational.hpp"

namespace bq {

struct IntegerFactorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned>> factors;  // ascending
    // false if some listed "prime" is a composite we failed to split
    bool complete = true;
};

const std::vector<uint32_t>& small_primes();  // all primes below 10^6

bool is_probable_prime(const Integer& n);
bool is_prime_u64(uint64_t n);

IntegerFactorization factor_integer(const Integer& n);

// positive divisors of |n|, n != 0; throws LimitExceeded above cap
std::vector<Integer> positive_divisors(const Integer& n, size_t cap = 1000000);

struct SquarefreeResult {
    Integer core;  // square-free part with sign
    bool normalized = true;
};

SquarefreeResult squarefree_part(const Integer& n);
// square-free part of num*den
SquarefreeResult squarefree_part(const Rational& q);

}  // namespace bq
