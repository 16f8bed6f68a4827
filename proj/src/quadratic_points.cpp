#include "bq/quadratic_points.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "bq/arith.hpp"
#include "bq/error.hpp"
#include "bq/factor.hpp"
#include "bq/quotient.hpp"

namespace bq {

NFElement galois_conjugate(const NFElement& x) {
    if (x.field().degree() != 2) return x;
    std::vector<Rational> c = x.coeffs();
    c.resize(2, Rational(0));
    c[1] = -c[1];
    return NFElement(x.field(), c);
}

ProjPoint galois_conjugate(const ProjPoint& P) {
    return ProjPoint(galois_conjugate(P.coords[0]), galois_conjugate(P.coords[1]), galois_conjugate(P.coords[2])).normalized();
}

std::string point_key(const ProjPoint& P) { return P.normalized().to_string(); }

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Term {
    Integer c;
    int e[3];
};

struct LineHits {
    std::map<std::string, ProjPoint> rational;
    std::vector<std::array<long, 3>> known;  // rational points with word-sized coordinates
    std::map<std::string, QuadraticPoint> quadratic;  // key: the smaller of the pair keys
    size_t scanned = 0, skipped = 0;
};

i128 to_i128(const Integer& z) {
    // callers guarantee |z| < 2^100
    Integer a = abs(z);
    Integer hi = a >> 64, lo = a - (hi << 64);
    i128 v = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
    return z < 0 ? -v : v;
}

Integer from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer r = (Integer(static_cast<unsigned long>(u >> 64)) << 64) + Integer(static_cast<unsigned long>(u & ~0ULL));
    return neg ? Integer(-r) : r;
}

// coefficients of (a s + b t)^e, index i = power of s
template <class T>
std::vector<T> linear_power(const T& a, const T& b, int e) {
    std::vector<T> r(1, T(1));
    for (int k = 0; k < e; ++k) {
        std::vector<T> n(r.size() + 1, T(0));
        for (size_t i = 0; i < r.size(); ++i) {
            n[i + 1] += r[i] * a;
            n[i] += r[i] * b;
        }
        r = std::move(n);
    }
    return r;
}

std::vector<Integer> restrict_big(const std::vector<Term>& terms, int d, const long P[3], const long Q[3]) {
    std::vector<std::vector<Integer>> pw[3];
    for (int v = 0; v < 3; ++v)
        for (int e = 0; e <= d; ++e) pw[v].push_back(linear_power<Integer>(Integer(P[v]), Integer(Q[v]), e));
    std::vector<Integer> f(d + 1, Integer(0));
    for (const Term& t : terms) {
        const auto &A = pw[0][t.e[0]], &B = pw[1][t.e[1]], &C = pw[2][t.e[2]];
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j) {
                Integer ab = t.c * A[i] * B[j];
                for (size_t k = 0; k < C.size(); ++k) f[i + j + k] += ab * C[k];
            }
    }
    return f;
}

constexpr int kMaxDeg = 6;
using Arr = std::array<i128, kMaxDeg + 1>;

// same restriction with fixed arrays; caller checked the coefficient bound
Arr restrict_small(const std::vector<Term>& terms, const std::vector<i128>& c, int d, const long P[3], const long Q[3]) {
    Arr pw[3][kMaxDeg + 1];
    for (int v = 0; v < 3; ++v) {
        pw[v][0].fill(0);
        pw[v][0][0] = 1;
        for (int e = 1; e <= d; ++e) {
            pw[v][e].fill(0);
            for (int i = 0; i < e; ++i) {
                pw[v][e][i + 1] += pw[v][e - 1][i] * P[v];
                pw[v][e][i] += pw[v][e - 1][i] * Q[v];
            }
        }
    }
    Arr f;
    f.fill(0);
    for (size_t n = 0; n < terms.size(); ++n) {
        const Term& t = terms[n];
        const Arr &A = pw[0][t.e[0]], &B = pw[1][t.e[1]], &C = pw[2][t.e[2]];
        for (int i = 0; i <= t.e[0]; ++i) {
            if (A[i] == 0) continue;
            for (int j = 0; j <= t.e[1]; ++j) {
                i128 ab = c[n] * A[i] * B[j];
                if (ab == 0) continue;
                for (int k = 0; k <= t.e[2]; ++k) f[i + j + k] += ab * C[k];
            }
        }
    }
    return f;
}

// arithmetic in F_p[x]/(g) for monic g of degree <= 6, p < 2^20
struct SmallField {
    uint64_t p;
    int n;                // degree of g
    uint64_t g[kMaxDeg];  // x^n = -(g[0] + ... + g[n-1] x^{n-1})

    uint64_t inv(uint64_t a) const {
        uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    }
    using E = std::array<uint64_t, kMaxDeg>;
    E mul(const E& a, const E& b) const {
        uint64_t t[2 * kMaxDeg] = {0};
        for (int i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < n; ++j) t[i + j] += a[i] * b[j];
        }
        for (int k = 2 * n - 2; k >= n; --k) {
            uint64_t c = t[k] % p;
            if (!c) continue;
            for (int i = 0; i < n; ++i) t[k - n + i] += (p - g[i]) * c;
        }
        E r{};
        for (int i = 0; i < n; ++i) r[i] = t[i] % p;
        return r;
    }
    E pow(E base, uint64_t e) const {
        E r{};
        r[0] = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return r;
    }
    // does gcd(h - x, g) have positive degree
    bool shares_factor(E h) const {
        h[1] = (h[1] + p - 1) % p;
        std::vector<uint64_t> a(g, g + n), b(h.begin(), h.begin() + n);
        a.push_back(1);
        auto trim = [](std::vector<uint64_t>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        trim(b);
        if (b.empty()) return true;
        while (!b.empty()) {
            // a mod b
            uint64_t li = inv(b.back());
            while (a.size() >= b.size() && !a.empty()) {
                uint64_t c = a.back() * li % p;
                size_t sh = a.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i) a[sh + i] = (a[sh + i] + (p - c) * b[i]) % p;
                trim(a);
            }
            std::swap(a, b);
        }
        return a.size() > 1;
    }
};

// true when reduction mod p proves f has no factor of degree <= 2 over Q
bool no_low_factor_mod(const Arr& f, int d, uint64_t p) {
    i128 lead = f[d] % static_cast<i128>(p);
    if (lead == 0) return false;
    SmallField K;
    K.p = p;
    K.n = d;
    uint64_t l = static_cast<uint64_t>(lead < 0 ? lead + p : lead);
    uint64_t li = K.inv(l);
    for (int i = 0; i < d; ++i) {
        i128 r = f[i] % static_cast<i128>(p);
        if (r < 0) r += p;
        K.g[i] = static_cast<uint64_t>(r) * li % p;
    }
    SmallField::E x{};
    x[1] = 1;
    auto h = K.pow(x, p);
    if (K.shares_factor(h)) return false;
    auto h2 = K.pow(h, p);
    return !K.shares_factor(h2);
}

class Enumerator {
public:
    Enumerator(const TernaryForm& F, long H) : H_(H), d_(F.degree()), F_(F) {
        Integer den = 1;
        for (const auto& [e, c] : F.terms()) {
            Integer cd = c.to_rational().get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), cd.get_mpz_t());
        }
        Integer sum = 0;
        for (const auto& [e, c] : F.terms()) {
            Rational v = c.to_rational() * Rational(den);
            terms_.push_back(Term{v.get_num(), {e[0], e[1], e[2]}});
            sum += abs(v.get_num());
        }
        // |f_i| <= sum * (2H)^d
        Integer bound = sum * ipow(Integer(2 * H), static_cast<unsigned long>(d_));
        small_ = bound < (Integer(1) << 100);
        if (small_)
            for (const auto& t : terms_) sm_.push_back(to_i128(t.c));
    }

    void scan(long l0, long l1, LineHits& hits) const {
        long lo2 = (l0 == 0 && l1 == 0) ? 1 : -H_;
        for (long l2 = lo2; l2 <= H_; ++l2) {
            if (std::gcd(std::gcd(l0, l1), l2) != 1) continue;
            line(l0, l1, l2, hits);
        }
    }

private:
    void line(long l0, long l1, long l2, LineHits& hits) const {
        ++hits.scanned;
        long P[3], Q[3];
        if (l0 == 0 && l1 == 0) {
            P[0] = 1, P[1] = 0, P[2] = 0;
            Q[0] = 0, Q[1] = 1, Q[2] = 0;
        } else {
            P[0] = -l1, P[1] = l0, P[2] = 0;
            if (l0 != 0)
                Q[0] = -l2, Q[1] = 0, Q[2] = l0;
            else
                Q[0] = 0, Q[1] = -l2, Q[2] = l1;
        }
        std::vector<Integer> f;
        if (small_) {
            Arr fi = restrict_small(terms_, sm_, d_, P, Q);
            // cheap exit: after removing known rational points, no factor of degree <= 2 modulo some prime
            Arr rest = fi;
            int dr = deflate_known(rest, l0, l1, l2, P, Q, hits);
            if (dr >= 3 && rest[dr] != 0 && quick_reject(rest, dr)) return;
            for (int i = 0; i <= d_; ++i) f.push_back(from_i128(fi[i]));
        } else {
            f = restrict_big(terms_, d_, P, Q);
        }
        bool zero = std::all_of(f.begin(), f.end(), [](const Integer& z) { return z == 0; });
        if (zero) {
            ++hits.skipped;
            return;
        }
        NumberField Qf = NumberField::rationals();
        auto comb = [&](const Integer& a, const Integer& b) {
            // a P + b Q
            return ProjPoint(NFElement(Qf, Rational(a * P[0] + b * Q[0])), NFElement(Qf, Rational(a * P[1] + b * Q[1])),
                             NFElement(Qf, Rational(a * P[2] + b * Q[2])))
                .normalized();
        };
        int top = d_;
        while (top >= 0 && f[top] == 0) --top;
        if (top < d_) add_rational(hits, comb(1, 0));  // t divides f: the point P
        if (top <= 0) return;
        std::vector<Rational> g(f.begin(), f.begin() + top + 1);
        Factorization fac = factor_low_degree(UniPoly(g));
        for (const auto& irr : fac.factors) {
            const UniPoly& h = irr.poly;
            if (h.degree() == 1) {
                Rational s = -h.coeff(0) / h.coeff(1);
                add_rational(hits, comb(s.get_num(), s.get_den()));
            } else if (h.degree() == 2) {
                add_quadratic(hits, h, P, Q, {l0, l1, l2});
            }
        }
    }

    static bool quick_reject(const Arr& f, int d) {
        // restrictions can have small Galois groups (F20 passes a prime 4 times in 5), so use many
        static const uint64_t primes[] = {13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,  67,
                                          71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137,
                                          139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
        for (uint64_t p : primes)
            if (no_low_factor_mod(f, d, p)) return true;
        return false;
    }

    // divide out the linear forms of known rational points on the line; returns the new degree
    int deflate_known(Arr& f, long l0, long l1, long l2, const long P[3], const long Q[3], const LineHits& hits) const {
        int d = d_;
        i128 N[3] = {static_cast<i128>(P[1]) * Q[2] - static_cast<i128>(P[2]) * Q[1],
                     static_cast<i128>(P[2]) * Q[0] - static_cast<i128>(P[0]) * Q[2],
                     static_cast<i128>(P[0]) * Q[1] - static_cast<i128>(P[1]) * Q[0]};
        for (const auto& R : hits.known) {
            if (static_cast<i128>(l0) * R[0] + static_cast<i128>(l1) * R[1] + static_cast<i128>(l2) * R[2] != 0) continue;
            // R ~ aP + bQ with a = (R x Q).N, b = (P x R).N
            i128 RQ[3] = {static_cast<i128>(R[1]) * Q[2] - static_cast<i128>(R[2]) * Q[1],
                          static_cast<i128>(R[2]) * Q[0] - static_cast<i128>(R[0]) * Q[2],
                          static_cast<i128>(R[0]) * Q[1] - static_cast<i128>(R[1]) * Q[0]};
            i128 PR[3] = {static_cast<i128>(P[1]) * R[2] - static_cast<i128>(P[2]) * R[1],
                          static_cast<i128>(P[2]) * R[0] - static_cast<i128>(P[0]) * R[2],
                          static_cast<i128>(P[0]) * R[1] - static_cast<i128>(P[1]) * R[0]};
            i128 a = RQ[0] * N[0] + RQ[1] * N[1] + RQ[2] * N[2];
            i128 b = PR[0] * N[0] + PR[1] * N[1] + PR[2] * N[2];
            i128 g = gcd128(a, b);
            a /= g, b /= g;
            // f = (b s - a t) q, coefficients indexed by the power of s
            Arr q;
            q.fill(0);
            if (b != 0) {
                i128 carry = f[d];
                bool ok = true;
                for (int i = d - 1; i >= 0; --i) {
                    if (carry % b != 0) { ok = false; break; }
                    q[i] = carry / b;
                    carry = f[i] + a * q[i];
                }
                if (!ok || carry != 0) continue;
            } else {
                if (f[d] != 0) continue;
                for (int i = 0; i < d; ++i) q[i] = -f[i] / a;
            }
            f = q;
            if (--d < 3) break;
        }
        return d;
    }

    static void add_rational(LineHits& hits, const ProjPoint& P) {
        if (!hits.rational.emplace(point_key(P), P).second) return;
        Integer den = 1;
        for (int v = 0; v < 3; ++v) {
            Integer cd = P.coords[v].to_rational().get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), cd.get_mpz_t());
        }
        std::array<long, 3> r{};
        for (int v = 0; v < 3; ++v) {
            Rational zr = P.coords[v].to_rational() * Rational(den);
            Integer z = zr.get_num();
            if (!z.fits_slong_p()) return;
            r[v] = z.get_si();
        }
        hits.known.push_back(r);
    }

    void add_quadratic(LineHits& hits, const UniPoly& h, const long P[3], const long Q[3], std::array<long, 3> l) const {
        // h = alpha s^2 + beta s + gamma with roots (-beta +- sqrt(disc))/(2 alpha);
        // point = (-beta P + 2 alpha Q) + k sqrt(D) P, disc = k^2 D
        auto ints = h.primitive_integer();
        const Integer &gam = ints[0], &beta = ints[1], &alpha = ints[2];
        Integer disc = beta * beta - 4 * alpha * gam;
        auto sf = squarefree_part(disc);
        Integer D = sf.core;
        Rational k2 = Rational(disc) / Rational(D);
        auto k = rational_sqrt(k2);
        if (!k) return;  // only for an unnormalized D that is not the true core
        NumberField K = NumberField::quadratic(D);
        NFElement r = NFElement::generator(K) * NFElement(K, *k);
        std::array<NFElement, 3> c;
        for (int v = 0; v < 3; ++v)
            c[v] = NFElement(K, Rational(-beta * P[v] + 2 * alpha * Q[v])) + r * NFElement(K, Rational(P[v]));
        QuadraticPoint qp;
        qp.D = D;
        qp.d_normalized = sf.normalized;
        ProjPoint A = ProjPoint(c[0], c[1], c[2]).normalized(), B = galois_conjugate(A);
        std::string ka = point_key(A), kb = point_key(B);
        if (kb < ka) {
            std::swap(A, B);
            std::swap(ka, kb);
        }
        qp.point = A;
        qp.conjugate = B;
        qp.source = QuadraticPoint::Source::Line;
        qp.line = {Integer(l[0]), Integer(l[1]), Integer(l[2])};
        hits.quadratic.emplace(ka, qp);
    }

    long H_;
    int d_;
    TernaryForm F_;
    std::vector<Term> terms_;
    std::vector<i128> sm_;
    bool small_ = false;
};

}  // namespace

QuadraticFieldReport enumerate_points(const TernaryForm& F, long H, unsigned workers) {
    if (F.degree() > 6) throw Error(ErrorKind::DegreeTooLarge, "enumeration supports degree <= 6");
    if (!F.is_rational()) throw Error(ErrorKind::UnsupportedCoefficientField, "enumeration needs a form over Q");
    if (H < 1 || H > 200) throw Error(ErrorKind::LimitExceeded, "line height must be in [1, 200]");
    Enumerator en(F, H);
    std::vector<std::pair<long, long>> jobs;
    for (long l0 = 0; l0 <= H; ++l0)
        for (long l1 = (l0 == 0 ? 0 : -H); l1 <= H; ++l1) jobs.emplace_back(l0, l1);
    if (workers == 0) workers = worker_count();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
    std::vector<LineHits> hits(workers);
    auto work = [&](unsigned w) {
        for (size_t j = w; j < jobs.size(); j += workers) en.scan(jobs[j].first, jobs[j].second, hits[w]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> th;
        for (unsigned w = 0; w < workers; ++w) th.emplace_back(work, w);
        for (auto& t : th) t.join();
    }
    LineHits all;
    for (auto& h : hits) {
        all.scanned += h.scanned;
        all.skipped += h.skipped;
        all.rational.insert(h.rational.begin(), h.rational.end());
        for (auto& [k, q] : h.quadratic) {
            auto it = all.quadratic.find(k);
            // keep the lexicographically smallest line for determinism
            if (it == all.quadratic.end())
                all.quadratic.emplace(k, q);
            else if (q.line < it->second.line)
                it->second = q;
        }
    }
    QuadraticFieldReport rep;
    rep.curve = F.to_string();
    rep.height_bound = H;
    rep.lines_scanned = all.scanned;
    rep.lines_skipped = all.skipped;
    for (auto& [k, p] : all.rational) rep.rational_points.push_back(p);
    for (auto& [k, q] : all.quadratic) rep.quadratic_points.push_back(q);
    std::stable_sort(rep.quadratic_points.begin(), rep.quadratic_points.end(),
                     [](const QuadraticPoint& a, const QuadraticPoint& b) { return a.D < b.D; });
    for (const auto& q : rep.quadratic_points)
        if (rep.distinct_D.empty() || rep.distinct_D.back() != q.D) rep.distinct_D.push_back(q.D);
    std::sort(rep.distinct_D.begin(), rep.distinct_D.end());
    rep.distinct_D.erase(std::unique(rep.distinct_D.begin(), rep.distinct_D.end()), rep.distinct_D.end());
    return rep;
}

std::vector<Integer> new_fields_report(const TernaryForm& F, long H, unsigned workers) {
    return enumerate_points(F, H, workers).distinct_D;
}

std::vector<PullbackPoint> pullback_quadratic_points(const Rational& a, long n_max) {
    if (n_max < 1 || n_max > 20) throw Error(ErrorKind::InadmissibleParameters, "n_max must be in [1, 20]");
    auto chain = chain_thm1(a);
    std::vector<PullbackPoint> out;
    NumberField Qf = NumberField::rationals();
    TernaryForm C = TernaryForm(Qf, 4,
                                PolyTerms{{{0, 0, 4}, NFElement(Qf, a)},
                                          {{0, 4, 0}, NFElement(Qf, 1)},
                                          {{0, 2, 2}, NFElement(Qf, a)},
                                          {{3, 1, 0}, NFElement(Qf, 1)}});
    for (long n = 1; n <= n_max; ++n) {
        PullbackPoint pb;
        pb.n = n;
        pb.ec = mul(chain.E, n, *chain.P);
        if (pb.ec.infinity) throw Error(ErrorKind::TorsionPoint, "nP = O for n = " + std::to_string(n));
        ChainPoint fib = chain.chain.backward_to_fiber(ChainPoint::affine(NFElement(Qf, pb.ec.x), NFElement(Qf, pb.ec.y)));
        Rational x = fib.x.to_rational(), w = fib.y.to_rational();
        if (auto r = rational_sqrt(w)) {
            pb.rational = true;
            pb.rational_point = ProjPoint(NFElement(Qf, x), NFElement(Qf, 1), NFElement(Qf, *r)).normalized();
            if (!point_on_curve(C, pb.rational_point)) throw Error(ErrorKind::PointNotOnCurve, "pullback left the curve");
        } else {
            auto sf = squarefree_part(w);
            NumberField K = NumberField::quadratic(sf.core);
            Rational c = *rational_sqrt(Rational(w / Rational(sf.core)));
            QuadraticPoint& q = pb.quadratic;
            q.D = sf.core;
            q.d_normalized = sf.normalized;
            q.point = ProjPoint(NFElement(K, x), NFElement(K, 1), NFElement::generator(K) * NFElement(K, c)).normalized();
            q.conjugate = galois_conjugate(q.point);
            q.source = QuadraticPoint::Source::Pullback;
            q.n = n;
            q.ec = pb.ec;
            TernaryForm CK = C.coerce(K);
            if (!point_on_curve(CK, q.point) || !point_on_curve(CK, q.conjugate))
                throw Error(ErrorKind::PointNotOnCurve, "pullback left the curve");
        }
        out.push_back(pb);
    }
    return out;
}

}  // namespace bq
