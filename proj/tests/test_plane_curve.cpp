#include <chrono>
#include <random>

#include "bq/error.hpp"
#include "bq/plane_curve.hpp"
#include "doctest.h"

using namespace bq;

namespace {

NumberField Q() { return NumberField::rationals(); }
NFElement q(long n, long d = 1) { return NFElement(Q(), make_rational(n, d)); }

ProjectiveTransformation mat(std::initializer_list<long> v) {
    Matrix3 m;
    int i = 0;
    for (long x : v) m[i++] = q(x);
    return ProjectiveTransformation(m);
}

TernaryForm random_sparse_quartic(std::mt19937_64& rng) {
    PolyTerms t;
    for (int i = 4; i >= 0; --i)
        for (int j = 4 - i; j >= 0; --j) {
            if (rng() % 3) continue;
            long c = (long)(rng() % 11) - 5;
            if (c) t.emplace(Exponent{i, j, 4 - i - j}, q(c));
        }
    // keep the pure powers so the curve is not obviously reducible
    t[{4, 0, 0}] = q(1);
    t[{0, 4, 0}] = q((long)(rng() % 3) + 1);
    t[{0, 0, 4}] = q((long)(rng() % 5) - 2 == 0 ? 1 : (long)(rng() % 5) - 2);
    return TernaryForm(Q(), 4, t);
}

}  // namespace

TEST_CASE("nonsingularity examples") {
    CHECK(is_nonsingular(TernaryForm::parse("X^4 + Y^4 + Z^4")));
    CHECK(is_nonsingular(TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X")));
    // A = 1/4, m = -2, n = 1
    auto F = TernaryForm::parse("1/4*4*Z^4 - 2*Y^2*Z^2 + X^3*Y + Y^4");
    CHECK_FALSE(is_nonsingular(F));
    std::array<NFElement, 3> p{q(0), q(1), q(1)};
    CHECK(F.eval(p).is_zero());
    for (int v = 0; v < 3; ++v) CHECK(F.partial(v).eval(p).is_zero());
    CHECK(is_nonsingular(TernaryForm::parse("Z^4 + Y^4 + Y^2*Z^2 + X^3*Y")));
    CHECK_FALSE(is_nonsingular(TernaryForm::parse("X^4 + Y^4 + 2*X^2*Y^2 + Z^4")) == true);
    CHECK_FALSE(is_nonsingular(TernaryForm::parse("(X^2 + Y^2 - Z^2)*(X^2 - 2*Y^2 + 3*Z^2)")));
    CHECK_FALSE(is_nonsingular(TernaryForm::parse("X^3 - Y^2*Z")));  // cusp
    CHECK(is_nonsingular(TernaryForm::parse("X^3 + Y^3 + Z^3")));
    CHECK(is_nonsingular(TernaryForm::parse("X^5 + Y^5 - Z^5")));
    CHECK(is_nonsingular(TernaryForm::parse("X^4*Y + Y^4*Z + Z^4*X")));
    CHECK(is_nonsingular(TernaryForm::parse("X^6 + Y^6 + Z^6 + X^2*Y^2*Z^2")));
    CHECK_THROWS_AS(is_nonsingular(TernaryForm::parse("X^7 + Y^7 + Z^7")), Error);
    NumberField K = NumberField::cyclotomic(3);
    CHECK_THROWS_AS(is_nonsingular(TernaryForm::parse("X^4 + Y^4 + zeta3*Z^4", K)), Error);
}

TEST_CASE("a singular point off the rational locus is still detected") {
    // node at (sqrt(2) : 1 : 0) and its conjugate: (X^2 - 2Y^2)^2 + Z^4 + Z^2*X*Y perturbation
    auto F = TernaryForm::parse("(X^2 - 2*Y^2)^2 + Z^2*(X^2 + Y^2) + Z^4");
    CHECK_FALSE(is_nonsingular(F));
    // nodes at (+-sqrt(2) : 1 : 1), away from every coordinate line
    CHECK_FALSE(is_nonsingular(TernaryForm::parse("(X^2 - 2*Y^2)^2 + (Y - Z)^2*(X^2 + Z^2)")));
    CHECK_FALSE(is_nonsingular(TernaryForm::parse("(X^2 + X*Y + 3*Y^2)^2 + (X + Y - 2*Z)^2*(Y^2 + Z^2) + (X^2 + X*Y + 3*Y^2)*(X + Y - 2*Z)*Z")));
}

TEST_CASE("modular one-sided check on random quartics") {
    std::mt19937_64 rng(404);
    int nonsingular = 0;
    for (int t = 0; t < 20; ++t) {
        TernaryForm F = random_sparse_quartic(rng);
        bool ns = is_nonsingular(F);
        if (!ns) continue;
        ++nonsingular;
        bool singular_everywhere = true;
        for (uint64_t p : {5, 7, 11, 13})
            if (singular_points_mod_p(F, p).empty()) singular_everywhere = false;
        CHECK_FALSE(singular_everywhere);
    }
    CHECK(nonsingular > 5);
}

TEST_CASE("exact check agrees with the mod-p heuristic on singular curves") {
    auto F = TernaryForm::parse("Z^4 - 2*Y^2*Z^2 + X^3*Y + Y^4");
    CHECK_FALSE(singular_points_mod_p(F, 7).empty());
    CHECK_FALSE(modular_nonsingularity_heuristic(F));
    CHECK(modular_nonsingularity_heuristic(TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X")));
}

TEST_CASE("apply_transformation") {
    auto F = TernaryForm::parse("X^4 + Y^4 + Z^4");
    CHECK(apply_transformation(F, ProjectiveTransformation::identity()) == F);
    CHECK(apply_transformation(F, ProjectiveTransformation::diag(q(1), q(1), q(-1))) == F);

    // S3 change of variables
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        Rational a = make_rational((long)(rng() % 19) - 9, (long)(rng() % 4) + 1);
        Rational b = make_rational((long)(rng() % 19) - 9, (long)(rng() % 4) + 1);
        PolyTerms s;
        auto G = TernaryForm::parse("(X^3 + Y^3)*Z + X^2*Y^2") +
                 TernaryForm::parse("X*Y*Z^2").scaled(NFElement(Q(), a)) + TernaryForm::parse("Z^4").scaled(NFElement(Q(), b));
        auto M = mat({1, -1, 1, 1, -1, -1, 0, 2, 0});
        auto lhs = apply_transformation(G, M);
        auto rhs = TernaryForm::parse("Z^4 - 2*Z^2*(X^2 - 8*X*Y) + X^4 - 6*X^2*Y^2 + 8*X*Y^3 - 3*Y^4") +
                   TernaryForm::parse("-2*Z^2*Y^2").scaled(NFElement(Q(), 2 * a + 7)) +
                   TernaryForm::parse("X^2*Y^2").scaled(NFElement(Q(), 4 * a)) +
                   TernaryForm::parse("X*Y^3").scaled(NFElement(Q(), -8 * a)) +
                   TernaryForm::parse("Y^4").scaled(NFElement(Q(), 4 * a + 16 * b)) -
                   TernaryForm::parse("-8*X*Y^3") - TernaryForm::parse("8*X*Y^3");
        auto inv = is_invariant(lhs, ProjectiveTransformation::identity());
        CHECK(inv.invariant);
        CHECK(lhs == rhs);
    }

    // inverse round trip
    for (int t = 0; t < 10; ++t) {
        Matrix3 m;
        for (auto& e : m) e = q((long)(rng() % 7) - 3);
        if (mat_det(m).is_zero()) continue;
        ProjectiveTransformation M(m);
        auto G = TernaryForm::parse("X^3*Y + 2*Y^3*Z - Z^3*X + X*Y*Z^2");
        auto back = apply_transformation(apply_transformation(G, M), M.inverse());
        // M.inverse() is normalized, so the round trip is G up to a scalar
        auto r = is_invariant(G, ProjectiveTransformation::identity());
        CHECK(r.invariant);
        auto first = G.terms().begin();
        NFElement s = back.coefficient(first->first) / first->second;
        CHECK(back == G.scaled(s));
        ProjectiveTransformation Minv(mat_adjugate(m));
        auto exact = apply_transformation(apply_transformation(G, M), ProjectiveTransformation(mat_scale(Minv.matrix(), mat_det(m).inverse())));
        CHECK(exact == G);
    }
}

TEST_CASE("is_invariant") {
    auto klein = TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X");
    auto h = mat({0, 1, 0, 0, 0, 1, 1, 0, 0});
    auto r = is_invariant(klein, h);
    CHECK(r.invariant);
    CHECK(r.scalar->is_one());
    CHECK_FALSE(is_invariant(klein, ProjectiveTransformation::diag(q(1), q(1), q(-1))).invariant);
    CHECK_FALSE(is_invariant(klein, ProjectiveTransformation::diag(q(1), q(1), q(-1))).scalar.has_value());
    auto g16 = TernaryForm::parse("Z^4 + X^4 + Y^4 + 3*X^2*Y^2");
    auto r2 = is_invariant(g16, mat({0, 1, 0, 1, 0, 0, 0, 0, -1}));
    CHECK(r2.invariant);
    CHECK(r2.scalar->is_one());
    auto id = is_invariant(klein, ProjectiveTransformation::identity());
    CHECK(id.invariant);
    CHECK(id.scalar->is_one());
    // mixed fields
    NumberField K = NumberField::cyclotomic(4);
    NFElement i = NFElement::generator(K);
    Matrix3 m = mat_identity(K);
    m[0] = NFElement(K, Rational(0));
    m[1] = NFElement(K, Rational(1));
    m[3] = NFElement(K, Rational(-1));
    m[4] = NFElement(K, Rational(0));
    m[8] = i;
    CHECK(is_invariant(g16, ProjectiveTransformation(m)).invariant);
    NumberField K7 = NumberField::cyclotomic(7);
    Matrix3 m7 = mat_identity(K7);
    m7[8] = NFElement::generator(K7);
    CHECK_THROWS_AS(is_invariant(g16.coerce(K), ProjectiveTransformation(m7)), Error);
}

TEST_CASE("point_on_curve") {
    auto klein = TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X");
    CHECK(point_on_curve(klein, ProjPoint(q(1), q(0), q(0))));
    CHECK_FALSE(point_on_curve(TernaryForm::parse("X^4 + Y^4 + Z^4"), ProjPoint(q(1), q(0), q(0))));
    NumberField K = NumberField::quadratic(Integer(-19));
    auto C1 = TernaryForm::parse("Z^4 + Y^4 + Y^2*Z^2 + X^3*Y");
    ProjPoint P(NFElement(K, Rational(-7)), NFElement(K, Rational(1)), NFElement::generator(K));
    CHECK(point_on_curve(C1, P));
    ProjPoint Pc(NFElement(K, Rational(-7)), NFElement(K, Rational(1)), -NFElement::generator(K));
    CHECK(point_on_curve(C1, Pc));
    CHECK(ProjPoint(q(2), q(4), q(6)).normalized() == ProjPoint(q(1), q(2), q(3)));
}

TEST_CASE("plane curve genus and construction") {
    auto C = PlaneCurve::make(TernaryForm::parse("X^4 + Y^4 + Z^4"));
    CHECK(C.genus == 3);
    CHECK(C.status == NonsingularityStatus::Verified);
    auto D = PlaneCurve::make(TernaryForm::parse("X^5 + Y^5 - Z^5"));
    CHECK(D.genus == 6);
    CHECK_THROWS_AS(PlaneCurve::make(TernaryForm::parse("Z^4 - 2*Y^2*Z^2 + X^3*Y + Y^4")), Error);
    NumberField K = NumberField::cyclotomic(12);
    NFElement z = NFElement::generator(K);
    NFElement coeff = z.pow(4) * NFElement(K, Rational(4)) + NFElement(K, Rational(2));
    auto F = TernaryForm::parse("Z^4 + X^4 + Y^4", K) + TernaryForm::parse("X^2*Y^2", K).scaled(coeff);
    auto E = PlaneCurve::make(F);
    CHECK(E.status == NonsingularityStatus::Heuristic);
}

TEST_CASE("nonsingularity timing on sextics") {
    auto t0 = std::chrono::steady_clock::now();
    CHECK(is_nonsingular(TernaryForm::parse("X^6 + 2*Y^6 - 3*Z^6 + X*Y^5 + X^3*Y^2*Z - 7*X*Y*Z^4")));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 30.0);
}
