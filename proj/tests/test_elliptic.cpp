#include <doctest.h>

#include <random>

#include "bq/arith.hpp"
#include "bq/error.hpp"
#include "bq/elliptic.hpp"

using namespace bq;

namespace {

Rational R(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// brute-force oracle: x = p/q^2 directly on y^2 = x^3 + A x + B with integer A, B
std::vector<ECPoint> brute(long A, long B, long H) {
    std::vector<ECPoint> out;
    for (long q = 1; q * q <= H; ++q)
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational x(p, q * q);
            Rational rhs = x * x * x + A * x + B;
            auto s = rational_sqrt(rhs);
            if (!s) continue;
            out.push_back(ECPoint::affine(x, *s));
            if (*s != 0) out.push_back(ECPoint::affine(x, Rational(-*s)));
        }
    std::sort(out.begin(), out.end(), [](const ECPoint& a, const ECPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    return out;
}

}  // namespace

TEST_CASE("invariants") {
    CHECK(j_invariant(WeierstrassCurve::short_form(0, 7)) == 0);
    CHECK(j_invariant(WeierstrassCurve::short_form(5, 0)) == 1728);
    CHECK(j_invariant(WeierstrassCurve(0, 0, 0, -4, 0)) == R(27648, 16));
    CHECK_THROWS_AS(WeierstrassCurve::short_form(-3, 2), Error);
    // long form: 11a3 y^2 + y = x^3 - x^2, j = -4096/11
    WeierstrassCurve E(0, -1, 1, 0, 0);
    auto inv = invariants(E);
    CHECK(inv.disc == -11);
    CHECK(inv.j == R(-4096, 11));
}

TEST_CASE("group law examples") {
    auto E = WeierstrassCurve::short_form(0, R(-3, 4));
    ECPoint P = ECPoint::affine(1, R(1, 2));
    CHECK(add(E, P, ECPoint()) == P);
    ECPoint P2 = mul(E, 2, P);
    CHECK(P2 == ECPoint::affine(7, R(-37, 2)));
    CHECK(R(37, 2) * R(37, 2) == 343 - R(3, 4));
    auto E27 = WeierstrassCurve::short_form(0, -27);
    CHECK(mul(E27, 2, ECPoint::affine(3, 0)).infinity);
    CHECK_THROWS_AS(add(E27, ECPoint::affine(1, 1), ECPoint()), Error);
}

TEST_CASE("group law properties") {
    // y^2 = x^3 - 2x + 5 has points of infinite order; build small points from multiples
    auto E = WeierstrassCurve::short_form(-2, 5);
    auto pts = search_points(E, 30);
    REQUIRE(pts.size() >= 4);
    std::vector<ECPoint> pool;
    for (const auto& P : pts)
        for (long n = -2; n <= 2; ++n) pool.push_back(mul(E, n, P));
    std::mt19937_64 g(11);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto &P = pool[pick(g)], &Q = pool[pick(g)], &S = pool[pick(g)];
        CHECK(add(E, add(E, P, Q), S) == add(E, P, add(E, Q, S)));
        CHECK(add(E, P, Q) == add(E, Q, P));
        CHECK(neg(E, neg(E, P)) == P);
    }
    ECPoint P = pts[0];
    for (long n = -6; n <= 6; ++n)
        for (long m = -6; m <= 6; ++m) CHECK(add(E, mul(E, n, P), mul(E, m, P)) == mul(E, n + m, P));
    // long form group law against the short model
    WeierstrassCurve L(1, -1, 1, 1, 2);  // through (0, 1) and (1, 1)
    auto [S, c] = short_model(L);
    auto lp = search_points(L, 50);
    REQUIRE(lp.size() >= 2);
    for (const auto& Q : lp) {
        CHECK(on_curve(L, Q));
        CHECK(map_to_new(c, add(L, Q, lp[0])) == add(S, map_to_new(c, Q), map_to_new(c, lp[0])));
    }
}

TEST_CASE("non-torsion certificates") {
    for (Rational a : {R(1), R(-1), R(2), R(-2), R(5), R(7, 2), R(-5, 3)}) {
        auto E = WeierstrassCurve::short_form(0, Rational(a * a * a * a / 4 - a * a * a));
        auto c = non_torsion_certificate(E, ECPoint::affine(a, Rational(a * a / 2)));
        CHECK(c.multiples.size() == 12);
    }
    // a = 3: x^3 = -4B makes (3, 9/2) a flex, hence of order 3
    try {
        non_torsion_certificate(WeierstrassCurve::short_form(0, R(-27, 4)), ECPoint::affine(3, R(9, 2)));
        FAIL("expected TorsionPoint");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("order 3") != std::string::npos);
    }
    try {
        non_torsion_certificate(WeierstrassCurve::short_form(0, -27), ECPoint::affine(3, 0));
        FAIL("expected TorsionPoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TorsionPoint);
        CHECK(std::string(e.what()).find("order 2") != std::string::npos);
    }
    // (2, 3) on y^2 = x^3 + 1 has order 6
    try {
        non_torsion_certificate(WeierstrassCurve::short_form(0, 1), ECPoint::affine(2, 3));
        FAIL("expected TorsionPoint");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("order 6") != std::string::npos);
    }
}

TEST_CASE("quadratic twists") {
    WeierstrassCurve E(0, 8, 0, 48, 0);  // m = 3
    auto T = quadratic_twist(E, 15);
    CHECK(T == WeierstrassCurve(0, 120, 0, 10800, 0));
    CHECK(T == WeierstrassCurve(0, 8 * 5 * 3, 0, 16 * 25 * 27, 0));
    CHECK(quadratic_twist(E, 1) == E);
    CHECK_THROWS_AS(quadratic_twist(E, 12), Error);
    std::mt19937_64 g(5);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 30; ++i) {
        WeierstrassCurve F;
        try {
            F = WeierstrassCurve(0, d(g), 0, d(g), d(g));
        } catch (const Error&) {
            continue;
        }
        Integer D = d(g);
        if (D == 0 || squarefree_part(D).core != D) continue;
        auto tw = quadratic_twist(F, D);
        CHECK(j_invariant(tw) == j_invariant(F));
        CHECK(is_isomorphic_over_q(quadratic_twist(tw, D), F));
        if (j_invariant(F) != 0 && j_invariant(F) != 1728) {
            auto f = quadratic_twist_factor(F, tw);
            REQUIRE(f.has_value());
            CHECK(*f == D);
        }
    }
}

TEST_CASE("isomorphism and integral models") {
    auto E = WeierstrassCurve::short_form(0, R(-3, 4));
    auto [I, c] = integral_short_model(E);
    CHECK(I == WeierstrassCurve::short_form(0, -48));
    CHECK(map_to_new(c, ECPoint::affine(1, R(1, 2))) == ECPoint::affine(4, 4));
    CHECK(is_isomorphic_over_q(E, I));
    CHECK(!is_isomorphic_over_q(WeierstrassCurve::short_form(0, 1), WeierstrassCurve::short_form(0, 2)));
    CHECK(is_isomorphic_over_q(WeierstrassCurve::short_form(1, 0), WeierstrassCurve::short_form(16, 0)));
    CHECK(!is_isomorphic_over_q(WeierstrassCurve::short_form(1, 0), WeierstrassCurve::short_form(4, 0)));
    CHECK(is_isomorphic_over_q(WeierstrassCurve::short_form(2, 3), WeierstrassCurve::short_form(32, 192)));
}

TEST_CASE("point search") {
    auto E27 = WeierstrassCurve::short_form(0, -27);
    auto pts = search_points(E27, 1000);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == ECPoint::affine(3, 0));
    CHECK(rank_verdict(E27, 1000).verdict == "2-torsion-only at height ≤ 1000");

    auto E1 = WeierstrassCurve::short_form(0, 1);
    auto p1 = search_points(E1, 10);
    for (auto P : {ECPoint::affine(-1, 0), ECPoint::affine(0, 1), ECPoint::affine(0, -1), ECPoint::affine(2, 3), ECPoint::affine(2, -3)})
        CHECK(std::find(p1.begin(), p1.end(), P) != p1.end());
    CHECK(rank_verdict(E1, 10).verdict == "no non-torsion point of height ≤ 10 found");

    auto E34 = WeierstrassCurve::short_form(0, R(-3, 4));
    auto p34 = search_points(E34, 100);
    CHECK(std::find(p34.begin(), p34.end(), ECPoint::affine(1, R(1, 2))) != p34.end());
    CHECK(rank_verdict(E34, 100).verdict == "rank ≥ 1 (non-torsion point exhibited)");

    // oracle agreement and worker independence on integral models
    for (auto [A, B] : std::vector<std::pair<long, long>>{{-2, 5}, {0, -27}, {-7, 10}, {3, -1}, {-43, 166}}) {
        auto E = WeierstrassCurve::short_form(A, B);
        auto o = brute(A, B, 200);
        CHECK(search_points(E, 200, 1) == o);
        CHECK(search_points(E, 200, 4) == o);
    }
}
