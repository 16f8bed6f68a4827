#include "bq/factor.hpp"

#include <algorithm>
#include <map>

#include "bq/arith.hpp"
#include "bq/error.hpp"
#include "bq/modp.hpp"

namespace bq {

namespace {

constexpr size_t kCandidateCap = 1000000;

int deg(const IntPoly& f) { return (int)f.size() - 1; }

Integer eval_int(const IntPoly& f, const Integer& x) {
    Integer r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

modp::Poly to_modp(const IntPoly& f, uint64_t p) {
    modp::Poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = modp::reduce(f[i], p);
    modp::trim(r);
    return r;
}

bool subset_sum_reaches(const std::vector<int>& pat, int k) {
    std::vector<bool> reach(k + 1, false);
    reach[0] = true;
    for (int d : pat)
        for (int s = k; s >= d; --s)
            if (reach[s - d]) reach[s] = true;
    return reach[k];
}

// all signed divisors
std::vector<Integer> signed_divisors(const Integer& n) {
    auto pos = positive_divisors(n, kCandidateCap);
    std::vector<Integer> out;
    out.reserve(2 * pos.size());
    for (auto& d : pos) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

struct ModFilter {
    uint64_t p;
    modp::Poly f;
};

std::vector<ModFilter> make_filters(const IntPoly& f, size_t count) {
    std::vector<ModFilter> fl;
    for (uint64_t p : modp::filter_primes()) {
        if (modp::reduce(f.back(), p) == 0) continue;
        fl.push_back({p, to_modp(f, p)});
        if (fl.size() == count) break;
    }
    return fl;
}

bool passes_filters(const std::vector<ModFilter>& fl, const IntPoly& g) {
    for (const auto& m : fl) {
        modp::Poly gm = to_modp(g, m.p);
        if ((int)gm.size() - 1 != deg(g)) continue;
        if (!modp::rem(m.f, gm, m.p).empty()) return false;
    }
    return true;
}

bool divides_exact(const IntPoly& f, const IntPoly& g, IntPoly& q) {
    IntPoly r = f;
    int dg = deg(g);
    if (deg(f) < dg) return false;
    q.assign(deg(f) - dg + 1, 0);
    for (int i = deg(f); i >= dg; --i) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), g.back().get_mpz_t())) return false;
        Integer t = r[i] / g.back();
        q[i - dg] = t;
        for (int j = 0; j <= dg; ++j) r[i - dg + j] -= t * g[j];
    }
    for (int i = 0; i < dg; ++i)
        if (r[i] != 0) return false;
    return true;
}

// search for a factor of degree 2 or 3 of primitive f without rational roots
bool find_factor(const IntPoly& f, int k, IntPoly& g_out, IntPoly& q_out) {
    if (!may_have_factor_of_degree(f, k)) return false;
    auto fl = make_filters(f, 6);
    auto lead_divs = positive_divisors(f.back(), kCandidateCap);
    auto const_divs = signed_divisors(f[0]);
    Integer f1 = eval_int(f, 1), fm1 = eval_int(f, -1);
    auto d1s = signed_divisors(f1);
    size_t budget = lead_divs.size() * const_divs.size() * d1s.size();
    if (k == 3) {
        auto dm1s = signed_divisors(fm1);
        budget *= dm1s.size();
        if (budget > 50 * kCandidateCap) throw Error(ErrorKind::LimitExceeded, "cubic factor search too large");
        for (auto& a : lead_divs)
            for (auto& c : const_divs)
                for (auto& d1 : d1s)
                    for (auto& dm1 : dm1s) {
                        // g(1) = a+b+e+c, g(-1) = -a+b-e+c
                        Integer s = d1 + dm1, t = d1 - dm1;
                        if (mpz_odd_p(s.get_mpz_t())) continue;
                        Integer b = s / 2 - c, e = t / 2 - a;
                        IntPoly g{c, e, b, a};
                        if (!passes_filters(fl, g)) continue;
                        if (divides_exact(f, g, q_out)) {
                            g_out = g;
                            return true;
                        }
                    }
        return false;
    }
    if (budget > 50 * kCandidateCap) throw Error(ErrorKind::LimitExceeded, "quadratic factor search too large");
    for (auto& a : lead_divs)
        for (auto& c : const_divs)
            for (auto& d1 : d1s) {
                Integer b = d1 - a - c;
                Integer gm1 = a - b + c;
                if (gm1 == 0 || !mpz_divisible_p(fm1.get_mpz_t(), gm1.get_mpz_t())) continue;
                IntPoly g{c, b, a};
                if (!passes_filters(fl, g)) continue;
                if (divides_exact(f, g, q_out)) {
                    g_out = g;
                    return true;
                }
            }
    return false;
}

UniPoly to_unipoly_monic(const IntPoly& f) { return UniPoly::from_integers(f).monic(); }

}  // namespace

IntPoly int_primitive(IntPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) return f;
    Integer g = 0;
    for (auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (f.back() < 0) g = -g;
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return f;
}

IntPoly int_divexact(const IntPoly& f, const IntPoly& g) {
    IntPoly q;
    if (!divides_exact(f, g, q)) throw Error(ErrorKind::DivisionByZero, "inexact integer polynomial division");
    return q;
}

bool may_have_factor_of_degree(const IntPoly& f, int k) {
    int n = deg(f);
    if (k <= 0 || k > n) return false;
    if (k == n) return true;
    int used = 0;
    for (uint64_t p : modp::filter_primes()) {
        if (modp::reduce(f.back(), p) == 0) continue;
        auto pat = modp::degree_pattern(to_modp(f, p), p);
        if (pat.empty()) continue;
        if (!subset_sum_reaches(pat, k)) return false;
        if (++used == 12) break;
    }
    return true;
}

std::vector<std::pair<Integer, Integer>> rational_roots(const IntPoly& f) {
    std::vector<std::pair<Integer, Integer>> roots;
    if (f.empty() || f[0] == 0) throw Error(ErrorKind::DivisionByZero, "rational_roots expects f(0) != 0");
    int n = deg(f);
    if (n < 1) return roots;
    if (!may_have_factor_of_degree(f, 1)) return roots;
    auto nums = positive_divisors(f[0], kCandidateCap);
    auto dens = positive_divisors(f.back(), kCandidateCap);
    if (nums.size() * dens.size() > kCandidateCap)
        throw Error(ErrorKind::LimitExceeded, "rational root candidates exceed cap");
    // roots mod small primes as a filter: b*x - a must vanish at some root
    std::vector<std::pair<uint64_t, std::vector<bool>>> rootsets;
    for (uint64_t p : modp::filter_primes()) {
        if (modp::reduce(f.back(), p) == 0) continue;
        auto fp = to_modp(f, p);
        std::vector<bool> isroot(p, false);
        for (uint64_t x = 0; x < p; ++x) {
            uint64_t v = 0;
            for (size_t i = fp.size(); i-- > 0;) v = (v * x + fp[i]) % p;
            isroot[x] = (v == 0);
        }
        rootsets.emplace_back(p, std::move(isroot));
        if (rootsets.size() == 6) break;
    }
    for (auto& b : dens)
        for (auto& a0 : nums)
            for (int sgn : {1, -1}) {
                Integer a = sgn * a0;
                Integer g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g != 1) continue;
                bool ok = true;
                for (auto& [p, isroot] : rootsets) {
                    uint64_t bp = modp::reduce(b, p);
                    if (bp == 0) continue;
                    uint64_t x = modp::reduce(a, p) * modp::inv(bp, p) % p;
                    if (!isroot[x]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                // b^n f(a/b)
                Integer acc = 0, apow = 1;
                std::vector<Integer> bpow(n + 1);
                bpow[0] = 1;
                for (int i = 1; i <= n; ++i) bpow[i] = bpow[i - 1] * b;
                for (int i = 0; i <= n; ++i) {
                    acc += f[i] * apow * bpow[n - i];
                    apow *= a;
                }
                if (acc == 0) roots.emplace_back(a, b);
            }
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        return Rational(x.first, x.second) < Rational(y.first, y.second);
    });
    return roots;
}

std::vector<IntPoly> factor_squarefree_int(const IntPoly& f0) {
    IntPoly f = int_primitive(f0);
    std::vector<IntPoly> out;
    if (deg(f) < 1) return out;
    if (deg(f) > 6) throw Error(ErrorKind::DegreeTooLarge, "degree above 6");
    if (f[0] == 0) {
        out.push_back(IntPoly{0, 1});
        f.erase(f.begin());
    }
    if (deg(f) >= 1) {
        for (auto& [a, b] : rational_roots(f)) {
            IntPoly lin{-a, b};
            out.push_back(lin);
            f = int_divexact(f, lin);
        }
    }
    std::vector<IntPoly> work{f};
    while (!work.empty()) {
        IntPoly g = work.back();
        work.pop_back();
        int n = deg(g);
        if (n < 1) continue;
        if (n <= 3) {
            out.push_back(g);
            continue;
        }
        IntPoly h, q;
        if (find_factor(g, 2, h, q)) {
            out.push_back(h);
            work.push_back(q);
            continue;
        }
        if (n == 6 && find_factor(g, 3, h, q)) {
            out.push_back(h);
            out.push_back(q);
            continue;
        }
        out.push_back(g);
    }
    for (auto& g : out) g = int_primitive(g);
    std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

Factorization factor_low_degree(const UniPoly& p) {
    if (p.degree() > 6) throw Error(ErrorKind::DegreeTooLarge, "factor_low_degree: degree " + std::to_string(p.degree()));
    if (p.is_zero()) throw Error(ErrorKind::DivisionByZero, "cannot factor the zero polynomial");
    Factorization res;
    res.unit = p.lead();
    // Yun square-free decomposition
    UniPoly a = p.monic();
    if (a.degree() == 0) return res;
    UniPoly b = a.derivative();
    UniPoly c = poly_gcd(a, b);
    UniPoly w = divmod(a, c).first;
    UniPoly y = divmod(b, c).first;
    int i = 1;
    std::vector<std::pair<UniPoly, int>> sqf;
    while (w.degree() > 0) {
        UniPoly z = y - w.derivative();
        UniPoly g = poly_gcd(w, z);
        if (g.degree() > 0) sqf.emplace_back(g, i);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        ++i;
    }
    for (auto& [s, mult] : sqf)
        for (auto& f : factor_squarefree_int(s.primitive_integer())) res.factors.push_back({to_unipoly_monic(f), mult});
    std::sort(res.factors.begin(), res.factors.end(), [](const IrreducibleFactor& x, const IrreducibleFactor& y) {
        if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
        const auto& cx = x.poly.coeffs();
        const auto& cy = y.poly.coeffs();
        for (size_t k = cx.size(); k-- > 0;)
            if (cx[k] != cy[k]) return cx[k] < cy[k];
        return x.multiplicity < y.multiplicity;
    });
    return res;
}

UniPoly Factorization::expand() const {
    UniPoly r = UniPoly::constant(unit);
    for (const auto& f : factors)
        for (int k = 0; k < f.multiplicity; ++k) r = r * f.poly;
    return r;
}

}  // namespace bq
