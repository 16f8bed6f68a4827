#include "bq/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bq/error.hpp"

namespace bq {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 pollard_brent_u64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1; c < 200; ++c) {
        u64 y = 2, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1 && r < (u64(1) << 40));
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return n;
}

void factor_u64_rec(u64 n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[Integer((unsigned long)n)]++;
        return;
    }
    u64 d = pollard_brent_u64(n);
    factor_u64_rec(d, out);
    factor_u64_rec(n / d, out);
}

Integer pollard_brent_mpz(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1; c < 20; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1, t;
        unsigned long r = 1, m = 256;
        auto f = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        unsigned long total = 0;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    f(y);
                    t = abs(x - y);
                    q = q * t;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            total += r;
            r <<= 1;
        } while (g == 1 && total < (1ul << 22));
        if (g == n) {
            do {
                f(ys);
                t = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return n;
}

bool fits_u64(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 63; }

u64 to_u64(const Integer& n) {
    u64 v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
    return v;
}

// n > 1 with no prime factor below 10^6
void factor_large_rec(const Integer& n, std::map<Integer, unsigned>& out, bool& complete) {
    if (n == 1) return;
    if (fits_u64(n)) {
        factor_u64_rec(to_u64(n), out);
        return;
    }
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    if (auto s = integer_sqrt_exact(n)) {
        std::map<Integer, unsigned> sub;
        factor_large_rec(*s, sub, complete);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    Integer d = pollard_brent_mpz(n);
    if (d == n || d == 1) {
        out[n]++;
        complete = false;
        return;
    }
    factor_large_rec(d, out, complete);
    factor_large_rec(n / d, out, complete);
}

}  // namespace

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t N = 1000000;
        std::vector<bool> comp(N + 1, false);
        std::vector<uint32_t> p;
        for (uint32_t i = 2; i <= N; ++i) {
            if (comp[i]) continue;
            p.push_back(i);
            for (uint64_t j = (uint64_t)i * i; j <= N; j += i) comp[j] = true;
        }
        return p;
    }();
    return primes;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

IntegerFactorization factor_integer(const Integer& n0) {
    if (n0 == 0) throw Error(ErrorKind::DivisionByZero, "cannot factor 0");
    IntegerFactorization res;
    res.sign = n0 < 0 ? -1 : 1;
    Integer n = abs(n0);
    std::map<Integer, unsigned> out;
    if (fits_u64(n)) {
        u64 v = to_u64(n);
        for (uint32_t p : small_primes()) {
            if ((u64)p * p > v) break;
            if (p > 1000) break;
            unsigned e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            if (e) out[Integer((unsigned long)p)] += e;
        }
        factor_u64_rec(v, out);
    } else {
        Integer q;
        for (uint32_t p : small_primes()) {
            if (fits_u64(n) && (u64)p * p > to_u64(n)) break;
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            if (e) out[Integer((unsigned long)p)] += e;
        }
        factor_large_rec(n, out, res.complete);
    }
    for (auto& [p, e] : out) res.factors.emplace_back(p, e);
    return res;
}

std::vector<Integer> positive_divisors(const Integer& n, size_t cap) {
    if (n == 0) throw Error(ErrorKind::DivisionByZero, "divisors of 0");
    auto f = factor_integer(n);
    size_t count = 1;
    for (auto& [p, e] : f.factors) {
        count *= (e + 1);
        if (count > cap) throw Error(ErrorKind::LimitExceeded, "divisor enumeration exceeds cap");
    }
    std::vector<Integer> divs{1};
    for (auto& [p, e] : f.factors) {
        size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

SquarefreeResult squarefree_part(const Integer& n) {
    if (n == 0) throw Error(ErrorKind::DivisionByZero, "square-free part of 0");
    auto f = factor_integer(n);
    SquarefreeResult r;
    r.core = f.sign;
    for (auto& [p, e] : f.factors)
        if (e % 2) r.core *= p;
    if (!f.complete) {
        // any composite left over has no prime factor below 10^6, so below 10^12 it is square-free
        for (auto& [p, e] : f.factors)
            if (p >= Integer("1000000000000") && !is_probable_prime(p)) r.normalized = false;
    }
    return r;
}

SquarefreeResult squarefree_part(const Rational& q) { return squarefree_part(Integer(q.get_num() * q.get_den())); }

}  // namespace bq
