#include <doctest.h>

#include <random>
#include <set>

#include "bq/arith.hpp"
#include "bq/error.hpp"
#include "bq/factor.hpp"
#include "bq/quadratic_points.hpp"

using namespace bq;

namespace {

NumberField Qf() { return NumberField::rationals(); }

ProjPoint qpt(long x, long y, long z) {
    return ProjPoint(NFElement(Qf(), Rational(x)), NFElement(Qf(), Rational(y)), NFElement(Qf(), Rational(z))).normalized();
}

bool has_point(const QuadraticFieldReport& r, const ProjPoint& P) {
    for (const auto& p : r.rational_points)
        if (p == P) return true;
    return false;
}

// independent oracle: every point on a vertical line qX = pZ with |p|, |q| <= H, found by
// evaluating F(p, Y, q) coefficientwise and factoring in Y
std::set<std::string> vertical_oracle(const TernaryForm& F, long H) {
    std::set<std::string> out;
    int d = F.degree();
    bool infinity_on = false;
    for (long q = 1; q <= H; ++q)
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(p, q) != 1) continue;
            std::vector<Rational> c(d + 1, Rational(0));
            for (const auto& [e, coef] : F.terms()) {
                Rational v = coef.to_rational();
                for (int i = 0; i < e[0]; ++i) v *= p;
                for (int i = 0; i < e[2]; ++i) v *= q;
                c[e[1]] += v;
            }
            if (c[d] == 0) infinity_on = true;
            UniPoly g(c);
            if (g.is_zero()) continue;
            if (g.degree() < 1) continue;
            for (const auto& f : factor_low_degree(g).factors) {
                const UniPoly& h = f.poly;
                if (h.degree() == 1) {
                    Rational y = -h.coeff(0) / h.coeff(1);
                    out.insert("R" + point_key(ProjPoint(NFElement(Qf(), Rational(p)), NFElement(Qf(), y), NFElement(Qf(), Rational(q)))));
                } else if (h.degree() == 2) {
                    Rational disc = h.coeff(1) * h.coeff(1) - 4 * h.coeff(0) * h.coeff(2);
                    Integer D = squarefree_part(disc).core;
                    Rational k = *rational_sqrt(Rational(disc / Rational(D)));
                    NumberField K = NumberField::quadratic(D);
                    NFElement y = (NFElement(K, -h.coeff(1)) + NFElement::generator(K) * NFElement(K, k)) / NFElement(K, 2 * h.coeff(2));
                    ProjPoint P = ProjPoint(NFElement(K, Rational(p)), y, NFElement(K, Rational(q))).normalized();
                    std::string a = point_key(P), b = point_key(galois_conjugate(P));
                    out.insert("Q" + std::min(a, b));
                }
            }
        }
    if (infinity_on) out.insert("R" + point_key(qpt(0, 1, 0)));
    return out;
}

bool on_vertical(const ProjPoint& P, long H) {
    const auto& c = P.coords;
    if (c[2].is_zero()) return c[0].is_zero();
    NFElement r = c[0] / c[2];
    if (!r.is_rational()) return false;
    Rational x = r.to_rational();
    return abs(x.get_num()) <= H && x.get_den() <= H;
}

std::set<std::string> filtered(const QuadraticFieldReport& rep, long H) {
    std::set<std::string> out;
    for (const auto& p : rep.rational_points)
        if (on_vertical(p, H)) out.insert("R" + point_key(p));
    for (const auto& q : rep.quadratic_points)
        if (on_vertical(q.point, H)) out.insert("Q" + point_key(q.point));
    return out;
}

TernaryForm C1() { return TernaryForm::parse("Z^4 + Y^2*Z^2 + X^3*Y + Y^4"); }

}  // namespace

TEST_CASE("klein quartic line Z=0") {
    auto rep = enumerate_points(TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X"), 1, 1);
    CHECK(has_point(rep, qpt(1, 0, 0)));
    CHECK(has_point(rep, qpt(0, 1, 0)));
    CHECK(has_point(rep, qpt(0, 0, 1)));
    for (const auto& q : rep.quadratic_points) CHECK(!q.point.coords[2].is_zero());
}

TEST_CASE("fermat quintic trivial points, emitted points lie on the curve") {
    TernaryForm F = TernaryForm::parse("X^5 + Y^5 - Z^5");
    auto rep = enumerate_points(F, 10);
    CHECK(has_point(rep, qpt(1, -1, 0)));
    CHECK(has_point(rep, qpt(1, 0, 1)));
    CHECK(has_point(rep, qpt(0, 1, 1)));
    for (const auto& p : rep.rational_points) CHECK(point_on_curve(F, p));
    for (const auto& q : rep.quadratic_points) {
        TernaryForm FK = F.coerce(q.point.coords[0].field());
        CHECK(point_on_curve(FK, q.point));
        CHECK(point_on_curve(FK, q.conjugate));
    }
}

TEST_CASE("C1 has the D = -19 point at H = 25 and D grows with H") {
    TernaryForm F = C1();
    auto rep = enumerate_points(F, 25);
    bool found = false;
    NumberField K = NumberField::quadratic(-19);
    ProjPoint target = ProjPoint(NFElement(K, Rational(-7)), NFElement(K, 1), NFElement::generator(K)).normalized();
    for (const auto& q : rep.quadratic_points) {
        if (q.D != -19) continue;
        if (q.point == target || q.conjugate == target) found = true;
    }
    CHECK(found);
    for (const auto& q : rep.quadratic_points) {
        TernaryForm FK = F.coerce(q.point.coords[0].field());
        CHECK(point_on_curve(FK, q.point));
        CHECK(point_on_curve(FK, q.conjugate));
        CHECK(squarefree_part(q.D).core == q.D);
    }
    // 3P pulls back to a pair on 36X + 73Y = 0, so the first new field shows up at height 73
    auto d10 = new_fields_report(F, 10), d40 = new_fields_report(F, 40), d80 = new_fields_report(F, 80);
    CHECK(d40 == d10);
    CHECK(d80.size() > d40.size());
    CHECK(std::binary_search(d80.begin(), d80.end(), Integer(2922)));
    for (const auto& D : d40) CHECK(std::binary_search(d80.begin(), d80.end(), D));
    CHECK(filtered(enumerate_points(F, 15), 15) == vertical_oracle(F, 15));
}

TEST_CASE("enumeration is deterministic across worker counts") {
    TernaryForm F = C1();
    auto a = enumerate_points(F, 12, 1), b = enumerate_points(F, 12, 4);
    REQUIRE(a.rational_points.size() == b.rational_points.size());
    REQUIRE(a.quadratic_points.size() == b.quadratic_points.size());
    for (size_t i = 0; i < a.quadratic_points.size(); ++i) {
        CHECK(a.quadratic_points[i].point == b.quadratic_points[i].point);
        CHECK(a.quadratic_points[i].line == b.quadratic_points[i].line);
    }
    CHECK(a.distinct_D == b.distinct_D);
}

TEST_CASE("fermat quintic distinct D is stable") {
    TernaryForm F = TernaryForm::parse("X^5 + Y^5 - Z^5");
    auto d10 = new_fields_report(F, 10), d40 = new_fields_report(F, 40);
    CHECK(d10 == d40);
}

TEST_CASE("brute-force oracle on random quartics") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> coef(-3, 3);
    const long H = 15;
    for (int trial = 0; trial < 3; ++trial) {
        PolyTerms t;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) {
                int c = coef(rng);
                if (c) t[{i, j, 4 - i - j}] = NFElement(Qf(), Rational(c));
            }
        t[{3, 1, 0}] = NFElement(Qf(), Rational(1));
        TernaryForm F(Qf(), 4, t);
        auto rep = enumerate_points(F, H);
        CHECK(filtered(rep, H) == vertical_oracle(F, H));
    }
}

TEST_CASE("pullbacks on C1") {
    auto pts = pullback_quadratic_points(Rational(1), 8);
    REQUIRE(pts.size() == 8);
    CHECK(pts[0].rational);
    CHECK(pts[0].rational_point == qpt(-1, 1, 0));
    REQUIRE(!pts[1].rational);
    CHECK(pts[1].quadratic.D == -19);
    CHECK(pts[1].ec.x == 7);
    std::set<Integer> Ds;
    TernaryForm F = C1();
    auto chain = chain_thm1(Rational(1));
    for (const auto& p : pts) {
        if (p.rational) continue;
        Ds.insert(p.quadratic.D);
        TernaryForm FK = F.coerce(p.quadratic.point.coords[0].field());
        CHECK(point_on_curve(FK, p.quadratic.point));
        CHECK(point_on_curve(FK, p.quadratic.conjugate));
        // forward through the chain lands on nP
        ChainPoint img = chain.chain.forward(p.quadratic.point);
        REQUIRE(!img.infinity);
        CHECK(img.x == NFElement(img.x.field(), p.ec.x));
        CHECK(img.y == NFElement(img.y.field(), p.ec.y));
    }
    CHECK(Ds.size() >= 3);
    CHECK_THROWS_AS(pullback_quadratic_points(Rational(1), 21), Error);
}

TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(enumerate_points(TernaryForm::parse("X^7 + Y^7 + Z^7"), 2), Error);
    CHECK_THROWS_AS(enumerate_points(C1(), 201), Error);
}
