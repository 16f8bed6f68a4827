#include <random>

#include "bq/arith.hpp"
#include "bq/error.hpp"
#include "bq/factor.hpp"
#include "bq/identity.hpp"
#include "bq/number_field.hpp"
#include "bq/ternary_form.hpp"
#include "doctest.h"

using namespace bq;

TEST_CASE("rational normalization") {
    Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(parse_rational("-6/4") == q);
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(make_rational(1, 0), Error);
    CHECK_THROWS_AS(parse_rational("1/x"), Error);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        long a = (long)(rng() % 2001) - 1000, b = (long)(rng() % 999) + 1;
        if (a == 0) continue;
        Rational x = make_rational(a, b);
        Rational y = make_rational(x.get_num(), x.get_den());
        CHECK(x == y);
        CHECK(make_rational(a, b) * make_rational(b, a) == 1);
    }
}

TEST_CASE("square and power tests") {
    CHECK(is_rational_square(make_rational(9, 4)));
    CHECK_FALSE(is_rational_square(Rational(-4)));
    CHECK(is_rational_fourth_power(make_rational(16, 81)));
    CHECK_FALSE(is_rational_fourth_power(Rational(4)));
    CHECK(is_rational_cube(make_rational(-8, 27)));
    CHECK(*rational_sqrt(make_rational(49, 121)) == make_rational(7, 11));
}

TEST_CASE("integer factorization") {
    auto f = factor_integer(Integer(-360));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::make_pair(Integer(2), 3u));
    CHECK(f.factors[2] == std::make_pair(Integer(5), 1u));
    // two primes above 10^6
    Integer n = Integer("1000003") * Integer("1000033") * 12;
    auto g = factor_integer(n);
    Integer prod = g.sign;
    for (auto& [p, e] : g.factors) prod *= ipow(p, e);
    CHECK(prod == n);
    CHECK(g.complete);
    Integer big = Integer("10000000019") * Integer("10000000033");
    auto h = factor_integer(big);
    CHECK(h.factors.size() == 2);
    CHECK(positive_divisors(Integer(12)).size() == 6);
    CHECK(squarefree_part(Integer(-76)).core == -19);
    CHECK(squarefree_part(make_rational(-19, 4)).core == -19);
    CHECK(squarefree_part(make_rational(3, 5)).core == 15);
}

TEST_CASE("number field arithmetic") {
    NumberField Q4 = NumberField::cyclotomic(4);
    NFElement i = NFElement::generator(Q4);
    CHECK(i * i == NFElement(Q4, Rational(-1)));
    CHECK(i.inverse() == -i);
    CHECK(Q4.label() == "Q(zeta4)");

    NumberField Q7 = NumberField::cyclotomic(7);
    NFElement z = NFElement::generator(Q7);
    NFElement alpha = z + z.pow(2) + z.pow(4);
    CHECK((alpha * alpha + alpha + NFElement(Q7, Rational(2))).is_zero());
    CHECK(z.pow(7).is_one());

    NumberField Q12 = NumberField::cyclotomic(12);
    CHECK(Q12.degree() == 4);
    NFElement w = NFElement::generator(Q12);
    CHECK(w.pow(3) * w.pow(3) == NFElement(Q12, Rational(-1)));

    CHECK_THROWS_AS(NFElement(Q4, Rational(0)).inverse(), Error);
    CHECK_THROWS_AS(i + z, Error);

    std::mt19937_64 rng(11);
    auto rnd = [&] {
        std::vector<Rational> c;
        for (int k = 0; k < 6; ++k) c.push_back(make_rational((long)(rng() % 21) - 10, (long)(rng() % 5) + 1));
        return NFElement(Q7, c);
    };
    for (int t = 0; t < 20; ++t) {
        NFElement a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("field labels and element syntax") {
    NumberField K = NumberField::from_label("Q(sqrt(-19))");
    NFElement s = parse_element("sqrt(-19)", K);
    CHECK(s * s == NFElement(K, Rational(-19)));
    CHECK(parse_element("1/2*sqrt(-19) - 3", K).to_string() == "1/2*sqrt(-19) - 3");
    CHECK(NumberField::from_label("Q(zeta7)").degree() == 6);
    CHECK_THROWS_AS(NumberField::from_label("Q(foo)"), Error);
    CHECK_THROWS_AS(NumberField::quadratic(Integer(12)), Error);
    CHECK_THROWS_AS(NumberField::custom(UniPoly(std::vector<Rational>{-1, 0, 1}), "bad", "t"), Error);
}

TEST_CASE("factor_low_degree examples") {
    auto x = UniPoly::x();
    auto one = UniPoly::constant(1);
    {
        UniPoly p = x * x * x * x - one;
        auto f = factor_low_degree(p);
        REQUIRE(f.factors.size() == 3);
        CHECK(f.factors[0].poly == x - one);
        CHECK(f.factors[1].poly == x + one);
        CHECK(f.factors[2].poly == x * x + one);
        CHECK(f.expand() == p);
    }
    {
        UniPoly p = x * x * x * x * x - UniPoly::constant(2);
        auto f = factor_low_degree(p);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].poly == p);
    }
    {
        UniPoly p = x * x * x * x + UniPoly::constant(2) * x * x + UniPoly::constant(9);
        auto f = factor_low_degree(p);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].poly == x * x - UniPoly::constant(2) * x + UniPoly::constant(3));
        CHECK(f.factors[1].poly == x * x + UniPoly::constant(2) * x + UniPoly::constant(3));
    }
    {
        // (x^3 - 2)(x^3 + x + 1), two cubics
        UniPoly p = (x * x * x - UniPoly::constant(2)) * (x * x * x + x + one);
        auto f = factor_low_degree(p);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].poly.degree() == 3);
        CHECK(f.expand() == p);
    }
    {
        UniPoly p = make_rational(3, 2) * (x - one) * (x - one) * (x * x + UniPoly::constant(5));
        auto f = factor_low_degree(p);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0].multiplicity == 2);
        CHECK(f.unit == make_rational(3, 2));
        CHECK(f.expand() == p);
    }
    CHECK_THROWS_AS(factor_low_degree(UniPoly::monomial(1, 7)), Error);
}

TEST_CASE("factor_low_degree property: products re-expand and quadratics are irreducible") {
    std::mt19937_64 rng(2026);
    auto rp = [&](int d) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(make_rational((long)(rng() % 13) - 6, (long)(rng() % 3) + 1));
        if (c.back() == 0) c.back() = 1;
        return UniPoly(c);
    };
    for (int t = 0; t < 60; ++t) {
        int d1 = 1 + (int)(rng() % 3), d2 = (int)(rng() % (7 - d1));
        UniPoly p = rp(d1) * (d2 ? rp(d2) : UniPoly::constant(1));
        if (p.degree() < 1) continue;
        auto f = factor_low_degree(p);
        CHECK(f.expand() == p);
        for (auto& fac : f.factors) {
            CHECK(fac.poly.lead() == 1);
            if (fac.poly.degree() == 2) {
                Rational b = fac.poly.coeff(1), c = fac.poly.coeff(0);
                CHECK_FALSE(is_rational_square(b * b - 4 * c));
            }
        }
    }
}

TEST_CASE("poly_identity_check") {
    ParamExpr f = [](const Rational& a) -> Rational { return (a + 1) * (a + 1); };
    ParamExpr g = [](const Rational& a) -> Rational { return a * a + 2 * a + 1; };
    CHECK(poly_identity_check(f, g, 2, 5));
    ParamExpr c3 = [](const Rational& a) -> Rational { return a * a * a; };
    ParamExpr c2 = [](const Rational& a) -> Rational { return a * a; };
    CHECK_FALSE(poly_identity_check(c3, c2, 3, 5));
    CHECK_THROWS_AS(poly_identity_check(f, g, 5, 5), Error);
    // poles are skipped
    ParamExpr r1 = [](const Rational& a) -> Rational {
        if (a == 1) throw Error(ErrorKind::PoleEncountered, "a = 1");
        return 1 / (a - 1);
    };
    ParamExpr r2 = [](const Rational& a) -> Rational {
        if (a * a == 1) throw Error(ErrorKind::PoleEncountered, "a = +-1");
        return (a + 1) / (a * a - 1);
    };
    auto res = poly_identity_check_detail(r1, r2, 2, 6);
    CHECK(res.equal);
    CHECK(res.skipped_poles == 2);
    auto seq = rational_sample_sequence(9);
    CHECK(seq[5] == make_rational(1, 2));
}

TEST_CASE("ternary form parsing and printing") {
    auto F = TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X");
    CHECK(F.degree() == 4);
    CHECK(F.to_string() == "X^3*Y + X*Z^3 + Y^3*Z");
    auto G = TernaryForm::parse("(X+Y)^2*Z^2 - 2*X*Y*Z^2");
    CHECK(G.to_string() == "X^2*Z^2 + Y^2*Z^2");
    NumberField K = NumberField::cyclotomic(3);
    auto H = TernaryForm::parse("Z^4 + X^4 + Y^4 + (4*zeta3 + 2)*X^2*Y^2", K);
    CHECK(H.to_string() == "X^4 + (4*zeta3 + 2)*X^2*Y^2 + Y^4 + Z^4");
    CHECK_THROWS_AS(TernaryForm::parse("X^2 + Y"), Error);
    CHECK_THROWS_AS(TernaryForm::parse("X^2 + * Y"), Error);
    CHECK(TernaryForm::parse("X^2/2 + Y^2").coefficient({2, 0, 0}) == NFElement(NumberField::rationals(), make_rational(1, 2)));
}
