#include "bq/modp.hpp"

namespace bq::modp {

uint64_t inv(uint64_t a, uint64_t p) {
    int64_t t = 0, nt = 1, r = (int64_t)p, nr = (int64_t)(a % p);
    while (nr) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += (int64_t)p;
    return (uint64_t)t;
}

uint64_t reduce(const Integer& z, uint64_t p) { return mpz_fdiv_ui(z.get_mpz_t(), (unsigned long)p); }

bool reduce(const Rational& q, uint64_t p, uint64_t& out) {
    uint64_t d = reduce(q.get_den(), p);
    if (d == 0) return false;
    out = reduce(q.get_num(), p) * inv(d, p) % p;
    return true;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

Poly rem(Poly a, const Poly& m, uint64_t p) {
    trim(a);
    size_t dm = m.size() - 1;
    uint64_t il = inv(m.back(), p);
    while (a.size() > dm && !a.empty()) {
        uint64_t t = a.back() * il % p;
        size_t off = a.size() - 1 - dm;
        for (size_t j = 0; j <= dm; ++j) a[off + j] = (a[off + j] + p - t * m[j] % p) % p;
        trim(a);
    }
    return a;
}

Poly sub(Poly a, const Poly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t il = inv(a.back(), p);
        for (auto& c : a) c = c * il % p;
    }
    return a;
}

Poly derivative(const Poly& a, uint64_t p) {
    Poly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
    trim(d);
    return d;
}

Poly powmod(Poly base, uint64_t e, const Poly& m, uint64_t p) {
    Poly r{1};
    r = rem(r, m, p);
    base = rem(base, m, p);
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), m, p);
        e >>= 1;
        if (e) base = rem(mul(base, base, p), m, p);
    }
    return r;
}

Poly powmod_x(uint64_t e, const Poly& m, uint64_t p) { return powmod(Poly{0, 1}, e, m, p); }

bool has_factor_deg_le2(const Poly& f, uint64_t p) {
    if (f.size() <= 1) return false;
    if (f.size() <= 3) return true;
    Poly x{0, 1};
    Poly h = powmod_x(p, f, p);
    if (gcd(sub(h, x, p), f, p).size() > 1) return true;
    Poly h2 = powmod(h, p, f, p);
    return gcd(sub(h2, x, p), f, p).size() > 1;
}

std::vector<int> degree_pattern(const Poly& f0, uint64_t p) {
    Poly f = f0;
    trim(f);
    if (f.size() <= 1) return {};
    if (gcd(f, derivative(f, p), p).size() > 1) return {};
    std::vector<int> pat;
    Poly x{0, 1};
    Poly h = x;
    for (int k = 1; 2 * k <= (int)f.size() - 1; ++k) {
        h = powmod(h, p, f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        int dg = (int)g.size() - 1;
        if (dg > 0) {
            for (int i = 0; i < dg / k; ++i) pat.push_back(k);
            // divide f by g
            Poly q;
            Poly r = f;
            size_t dd = g.size() - 1;
            q.assign(r.size() - dd, 0);
            for (size_t i = r.size(); i-- > dd;) {
                uint64_t t = r[i];
                q[i - dd] = t;
                for (size_t j = 0; j <= dd; ++j) r[i - dd + j] = (r[i - dd + j] + p - t * g[j] % p) % p;
            }
            trim(q);
            f = q;
            h = rem(h, f, p);
        }
    }
    if (f.size() > 1) pat.push_back((int)f.size() - 1);
    return pat;
}

const std::vector<uint64_t>& filter_primes() {
    static const std::vector<uint64_t> ps{3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41,  43,
                                          47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107};
    return ps;
}

}  // namespace bq::modp
