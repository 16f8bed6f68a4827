#include "bq/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "bq/arith.hpp"
#include "bq/error.hpp"

namespace bq {

Rational discriminant(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6) {
    Rational b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
    Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return Rational(-b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6);
}

WeierstrassCurve::WeierstrassCurve(const Rational& a1_, const Rational& a2_, const Rational& a3_, const Rational& a4_, const Rational& a6_)
    : a1(a1_), a2(a2_), a3(a3_), a4(a4_), a6(a6_) {
    if (discriminant(a1, a2, a3, a4, a6) == 0) throw Error(ErrorKind::SingularCurve, "singular Weierstrass equation " + to_string());
}

WeierstrassCurve WeierstrassCurve::short_form(const Rational& A, const Rational& B) { return WeierstrassCurve(0, 0, 0, A, B); }

bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
}

std::string WeierstrassCurve::to_string() const {
    auto term = [](std::string& s, const Rational& c, const std::string& mono) {
        if (c == 0) return;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        s += neg ? " - " : " + ";
        if (mono.empty())
            s += bq::to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += bq::to_string(a) + "*" + mono;
    };
    std::string lhs = "y^2";
    term(lhs, a1, "x*y");
    term(lhs, a3, "y");
    std::string rhs = "x^3";
    term(rhs, a2, "x^2");
    term(rhs, a4, "x");
    term(rhs, a6, "");
    return lhs + " = " + rhs;
}

EllipticInvariants invariants(const WeierstrassCurve& E) {
    EllipticInvariants v;
    v.b2 = E.a1 * E.a1 + 4 * E.a2;
    v.b4 = 2 * E.a4 + E.a1 * E.a3;
    v.b6 = E.a3 * E.a3 + 4 * E.a6;
    v.b8 = E.a1 * E.a1 * E.a6 + 4 * E.a2 * E.a6 - E.a1 * E.a3 * E.a4 + E.a2 * E.a3 * E.a3 - E.a4 * E.a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
    if (v.disc == 0) throw Error(ErrorKind::SingularCurve, "discriminant is zero");
    v.j = v.c4 * v.c4 * v.c4 / v.disc;
    return v;
}

Rational j_invariant(const WeierstrassCurve& E) { return invariants(E).j; }

std::string ECPoint::to_string() const {
    if (infinity) return "O";
    return "(" + bq::to_string(x) + ", " + bq::to_string(y) + ")";
}

bool on_curve(const WeierstrassCurve& E, const ECPoint& P) {
    if (P.infinity) return true;
    const Rational &x = P.x, &y = P.y;
    return y * y + E.a1 * x * y + E.a3 * y == x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
}

namespace {

void require_on(const WeierstrassCurve& E, const ECPoint& P) {
    if (!on_curve(E, P)) throw Error(ErrorKind::PointNotOnCurve, P.to_string() + " is not on " + E.to_string());
}

ECPoint neg_raw(const WeierstrassCurve& E, const ECPoint& P) {
    if (P.infinity) return P;
    return ECPoint::affine(P.x, Rational(-P.y - E.a1 * P.x - E.a3));
}

ECPoint add_raw(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational lam, nu;
    if (P.x == Q.x) {
        if (P.y + Q.y + E.a1 * Q.x + E.a3 == 0) return ECPoint::at_infinity();
        Rational den = 2 * P.y + E.a1 * P.x + E.a3;
        lam = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4 - E.a1 * P.y) / den;
        nu = (-P.x * P.x * P.x + E.a4 * P.x + 2 * E.a6 - E.a3 * P.y) / den;
    } else {
        lam = (Q.y - P.y) / (Q.x - P.x);
        nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
    }
    Rational x3 = lam * lam + E.a1 * lam - E.a2 - P.x - Q.x;
    Rational y3 = -(lam + E.a1) * x3 - nu - E.a3;
    return ECPoint::affine(x3, y3);
}

ECPoint mul_raw(const WeierstrassCurve& E, long n, ECPoint P) {
    if (n < 0) {
        P = neg_raw(E, P);
        n = -n;
    }
    ECPoint R;
    while (n > 0) {
        if (n & 1) R = add_raw(E, R, P);
        n >>= 1;
        if (n) P = add_raw(E, P, P);
    }
    return R;
}

}  // namespace

ECPoint neg(const WeierstrassCurve& E, const ECPoint& P) {
    require_on(E, P);
    return neg_raw(E, P);
}

ECPoint add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
    require_on(E, P);
    require_on(E, Q);
    return add_raw(E, P, Q);
}

ECPoint mul(const WeierstrassCurve& E, long n, const ECPoint& P) {
    require_on(E, P);
    return mul_raw(E, n, P);
}

NonTorsionCertificate non_torsion_certificate(const WeierstrassCurve& E, const ECPoint& P) {
    require_on(E, P);
    if (P.infinity) throw Error(ErrorKind::TorsionPoint, "the identity has order 1");
    NonTorsionCertificate c{E, P, {}};
    ECPoint Q = P;
    for (int n = 1; n <= 12; ++n) {
        if (Q.infinity) throw Error(ErrorKind::TorsionPoint, P.to_string() + " has order " + std::to_string(n));
        c.multiples.emplace_back(n, Q);
        Q = add_raw(E, Q, P);
    }
    return c;
}

WeierstrassCurve change_coordinates(const WeierstrassCurve& E, const CoordinateChange& c) {
    const Rational &u = c.u, &r = c.r, &s = c.s, &t = c.t;
    Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    Rational a1 = (E.a1 + 2 * s) / u;
    Rational a2 = (E.a2 - s * E.a1 + 3 * r - s * s) / u2;
    Rational a3 = (E.a3 + r * E.a1 + 2 * t) / u3;
    Rational a4 = (E.a4 - s * E.a3 + 2 * r * E.a2 - (t + r * s) * E.a1 + 3 * r * r - 2 * s * t) / u4;
    Rational a6 = (E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1) / u6;
    return WeierstrassCurve(a1, a2, a3, a4, a6);
}

ECPoint map_to_new(const CoordinateChange& c, const ECPoint& P) {
    if (P.infinity) return P;
    Rational u2 = c.u * c.u;
    Rational x = (P.x - c.r) / u2;
    Rational y = (P.y - c.s * (P.x - c.r) - c.t) / (u2 * c.u);
    return ECPoint::affine(x, y);
}

ECPoint map_to_old(const CoordinateChange& c, const ECPoint& P) {
    if (P.infinity) return P;
    Rational u2 = c.u * c.u;
    return ECPoint::affine(Rational(u2 * P.x + c.r), Rational(u2 * c.u * P.y + c.s * u2 * P.x + c.t));
}

CoordinateChange compose(const CoordinateChange& a, const CoordinateChange& b) {
    // old -a-> mid -b-> new: x = u^2 x_mid + r, x_mid = v^2 x_new + r'
    CoordinateChange c;
    c.u = a.u * b.u;
    c.r = a.u * a.u * b.r + a.r;
    c.s = a.s + a.u * b.s;
    c.t = a.t + a.s * a.u * a.u * b.r + a.u * a.u * a.u * b.t;
    return c;
}

std::pair<WeierstrassCurve, CoordinateChange> short_model(const WeierstrassCurve& E) {
    CoordinateChange c;
    Rational b2 = E.a1 * E.a1 + 4 * E.a2;
    c.s = -E.a1 / 2;
    c.r = -b2 / 12;
    c.t = -(E.a3 + c.r * E.a1) / 2;
    return {change_coordinates(E, c), c};
}

std::pair<WeierstrassCurve, CoordinateChange> integral_short_model(const WeierstrassCurve& E) {
    auto [S, c] = short_model(E);
    // scale x by k^2 to clear denominators: u = 1/k
    Integer k = lcm_of_denominators({S.a4, S.a6});
    CoordinateChange sc;
    sc.u = Rational(1) / Rational(k);
    WeierstrassCurve I = change_coordinates(S, sc);
    Integer A = I.a4.get_num(), B = I.a6.get_num();
    // remove p with p^4 | A and p^6 | B
    Integer g = A == 0 ? B : (B == 0 ? A : Integer(gcd(A, B)));
    Integer shrink = 1;
    if (g != 0) {
        IntegerFactorization f = factor_integer(g);
        for (const auto& [p, e] : f.factors) {
            (void)e;
            Integer p4 = p * p * p * p, p6 = p4 * p * p;
            while (A % p4 == 0 && B % p6 == 0) {
                A /= p4;
                B /= p6;
                shrink *= p;
            }
        }
    }
    if (shrink != 1) {
        CoordinateChange sh;
        sh.u = Rational(shrink);
        I = change_coordinates(I, sh);
        sc = compose(sc, sh);
    }
    return {I, compose(c, sc)};
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, const Integer& D) {
    if (E.a1 != 0 || E.a3 != 0) throw Error(ErrorKind::WrongShape, "twist needs a1 = a3 = 0");
    if (D == 0) throw Error(ErrorKind::NotSquareFree, "D = 0");
    auto sq = squarefree_part(D);
    if (sq.core != D) throw Error(ErrorKind::NotSquareFree, to_string(D) + " is not square-free");
    Rational d(D);
    return WeierstrassCurve(0, Rational(d * E.a2), 0, Rational(d * d * E.a4), Rational(d * d * d * E.a6));
}

namespace {

bool is_rational_sixth_power(const Rational& q) {
    auto s = rational_sqrt(q);
    return s && is_rational_cube(*s);
}

}  // namespace

bool is_isomorphic_over_q(const WeierstrassCurve& E1, const WeierstrassCurve& E2) {
    auto S1 = short_model(E1).first, S2 = short_model(E2).first;
    const Rational &A = S1.a4, &B = S1.a6, &A2 = S2.a4, &B2 = S2.a6;
    if ((A == 0) != (A2 == 0) || (B == 0) != (B2 == 0)) return false;
    if (A == 0) return is_rational_sixth_power(B2 / B);
    if (B == 0) return is_rational_fourth_power(A2 / A);
    // u^2 = (B2 A)/(B A2), then u^4 = A2/A
    Rational u2 = (B2 * A) / (B * A2);
    if (!is_rational_square(u2)) return false;
    return u2 * u2 == A2 / A && u2 * u2 * u2 == B2 / B;
}

std::optional<Integer> quadratic_twist_factor(const WeierstrassCurve& E1, const WeierstrassCurve& E2) {
    auto S1 = short_model(E1).first, S2 = short_model(E2).first;
    if (j_invariant(S1) != j_invariant(S2)) return std::nullopt;
    std::vector<Rational> cands;
    if (S1.a4 != 0 && S1.a6 != 0)
        cands.push_back((S2.a6 * S1.a4) / (S1.a6 * S2.a4));
    else if (S1.a6 == 0)
        cands.push_back(Rational(0));  // A2/A = D^2 u^4: D only determined up to the quartic class
    else
        cands.push_back(S2.a6 / S1.a6);
    for (const Rational& c : cands) {
        if (c != 0) {
            Integer D = squarefree_part(c).core;
            if (is_isomorphic_over_q(quadratic_twist(S1, D), S2)) return D;
        }
    }
    if (S1.a6 == 0) {
        // A2/A = D^2 u^4; try the square-free D dividing the sign and prime content
        Rational r = S2.a4 / S1.a4;
        if (r < 0) return std::nullopt;
        auto s = rational_sqrt(r);
        if (!s) return std::nullopt;
        for (int sign : {1, -1}) {
            Integer D = squarefree_part(Rational(*s * sign)).core;
            if (is_isomorphic_over_q(quadratic_twist(S1, D), S2)) return D;
        }
    }
    return std::nullopt;
}

unsigned worker_count() {
    if (const char* e = std::getenv("BQ_WORKERS")) {
        int n = std::atoi(e);
        if (n > 0) return static_cast<unsigned>(n);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : std::min(h, 16u);
}

namespace {

using i128 = __int128;

bool square_i128(i128 v, i128& root) {
    if (v < 0) return false;
    // quick residue filter mod 64
    static const bool qr64[64] = {1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
                                  0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0};
    if (!qr64[static_cast<int>(v & 63)]) return false;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return false;
    root = r;
    return true;
}

Integer to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

}  // namespace

std::vector<ECPoint> search_points(const WeierstrassCurve& E, long H, unsigned workers) {
    if (H > 10000) throw Error(ErrorKind::LimitExceeded, "height bound above 10^4");
    if (H < 1) return {};
    auto [I, change] = integral_short_model(E);
    Integer A = I.a4.get_num(), B = I.a6.get_num();
    long qmax = static_cast<long>(std::floor(std::sqrt(static_cast<double>(H))));
    while ((qmax + 1) * (qmax + 1) <= H) ++qmax;
    while (qmax * qmax > H) --qmax;
    bool small = A.fits_slong_p() && B.fits_slong_p() && abs(A) < Integer("1000000000000000000") && abs(B) < Integer("1000000000000000000");
    if (workers == 0) workers = worker_count();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(qmax)));
    std::vector<std::vector<ECPoint>> found(workers);
    auto work = [&](unsigned w) {
        long a = small ? A.get_si() : 0, b = small ? B.get_si() : 0;
        for (long q = 1 + w; q <= qmax; q += workers) {
            long q2 = q * q;
            i128 q4 = static_cast<i128>(q2) * q2, q6 = q4 * q2;
            for (long p = -H; p <= H; ++p) {
                if (std::gcd(p, q) != 1) continue;
                Rational x = make_rational(Integer(p), Integer(q2));
                if (small && std::abs(p) <= 10000 && q <= 100) {
                    // p^3 + A p q^4 + B q^6 fits comfortably in 128 bits here
                    i128 v = static_cast<i128>(p) * p * p + static_cast<i128>(a) * p * q4 + static_cast<i128>(b) * q6;
                    i128 s;
                    if (!square_i128(v, s)) continue;
                    Rational y = make_rational(to_mpz(s), Integer(q2) * q);
                    found[w].push_back(ECPoint::affine(x, y));
                    if (s != 0) found[w].push_back(ECPoint::affine(x, Rational(-y)));
                } else {
                    Integer P(p), Q2(q2);
                    Integer v = P * P * P + A * P * Q2 * Q2 + B * Q2 * Q2 * Q2;
                    if (v < 0) continue;
                    auto s = integer_sqrt_exact(v);
                    if (!s) continue;
                    Rational y = make_rational(*s, Q2 * q);
                    found[w].push_back(ECPoint::affine(x, y));
                    if (*s != 0) found[w].push_back(ECPoint::affine(x, Rational(-y)));
                }
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> th;
        for (unsigned w = 0; w < workers; ++w) th.emplace_back(work, w);
        for (auto& t : th) t.join();
    }
    std::vector<ECPoint> out;
    for (const auto& v : found)
        for (const auto& P : v) out.push_back(map_to_old(change, P));
    std::sort(out.begin(), out.end(), [](const ECPoint& a, const ECPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    return out;
}

RankVerdict rank_verdict(const WeierstrassCurve& E, long H) {
    RankVerdict v;
    v.height_bound = H;
    v.points = search_points(E, H);
    bool all_two_torsion = !v.points.empty();
    for (const auto& P : v.points) {
        if (!(add_raw(E, P, P).infinity)) all_two_torsion = false;
        if (!v.certificate) {
            try {
                v.certificate = non_torsion_certificate(E, P);
            } catch (const Error&) {
            }
        }
    }
    std::string h = std::to_string(H);
    if (v.certificate)
        v.verdict = "rank ≥ 1 (non-torsion point exhibited)";
    else if (all_two_torsion)
        v.verdict = "2-torsion-only at height ≤ " + h;
    else
        v.verdict = "no non-torsion point of height ≤ " + h + " found";
    return v;
}

}  // namespace bq
